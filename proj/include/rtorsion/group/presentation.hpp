#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtorsion/group/free_word.hpp"

namespace rtorsion::group {

/// Finitely presented group <x_1, ..., x_g | r_1, ..., r_m>.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  /// Throws InputError on duplicate or malformed generator names, or on
  /// relators referencing generators that do not exist.
  GroupPresentation(std::vector<std::string> generators, std::vector<FreeWord> relators);

  /// Builds a presentation from relator strings in word syntax.
  static GroupPresentation parse(std::vector<std::string> generators, const std::vector<std::string>& relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::size_t relator_count() const { return relators_.size(); }
  long deficiency() const {
    return static_cast<long>(generators_.size()) - static_cast<long>(relators_.size());
  }

  std::optional<std::uint32_t> index_of(std::string_view name) const;

  /// Whitespace-separated tokens `name` or `name^<int>`, e.g. "x y^-1 x^2".
  FreeWord parse_word(std::string_view text) const;
  std::string format_word(const FreeWord& w) const;

 private:
  std::vector<std::string> generators_;
  std::vector<FreeWord> relators_;
};

}  // namespace rtorsion::group
