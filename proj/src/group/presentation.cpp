#include "rtorsion/group/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "rtorsion/errors.hpp"

namespace rtorsion::group {

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<FreeWord> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const auto& name : generators_) {
    if (name.empty() || name.find('^') != std::string::npos ||
        std::any_of(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }))
      throw InputError("invalid generator name '" + name + "'");
    if (!seen.insert(name).second) throw InputError("duplicate generator name '" + name + "'");
  }
  for (std::size_t i = 0; i < relators_.size(); ++i)
    for (const Letter& l : relators_[i].letters())
      if (l.generator >= generators_.size())
        throw InputError("relator " + std::to_string(i) + " references generator index " +
                         std::to_string(l.generator) + " out of range");
}

GroupPresentation GroupPresentation::parse(std::vector<std::string> generators,
                                           const std::vector<std::string>& relators) {
  GroupPresentation p(std::move(generators), {});
  for (const auto& r : relators) p.relators_.push_back(p.parse_word(r));
  return p;
}

std::optional<std::uint32_t> GroupPresentation::index_of(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - generators_.begin());
}

FreeWord GroupPresentation::parse_word(std::string_view text) const {
  std::vector<Letter> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string name = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string e = token.substr(caret + 1);
      if (e.size() > 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
      const char* first = e.data();
      if (!e.empty() && e[0] == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, e.data() + e.size(), exponent);
      if (e.empty() || ec != std::errc() || ptr != e.data() + e.size())
        throw InputError("bad exponent in token '" + token + "'");
    }
    auto g = index_of(name);
    if (!g) throw InputError("unknown generator '" + name + "' in token '" + token + "'");
    int sign = exponent < 0 ? -1 : 1;
    for (long i = 0; i < std::abs(exponent); ++i) raw.push_back({*g, sign});
  }
  return FreeWord(raw);
}

std::string GroupPresentation::format_word(const FreeWord& w) const {
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long e = static_cast<long>(j - i) * ls[i].exponent;
    if (!out.empty()) out += ' ';
    out += generators_.at(ls[i].generator);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace rtorsion::group
