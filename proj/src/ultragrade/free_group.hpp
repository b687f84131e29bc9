#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ultragrade/presentation.hpp"

namespace ultragrade {

struct Letter {
  EdgeInst edge;
  bool inverse = false;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Reduced word in the free group on the edges.
class FreeGroupWord {
 public:
  FreeGroupWord() = default;
  static FreeGroupWord from_letters(const std::vector<Letter>& letters);
  static FreeGroupWord of_path(const EdgePath& a);
  /// a b^{-1}
  static FreeGroupWord quotient(const EdgePath& a, const EdgePath& b);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  FreeGroupWord operator*(const FreeGroupWord& o) const;
  FreeGroupWord inverse() const;

  /// Splits into positive part a and negative part b when the word is
  /// a b^{-1}; nullopt for any other shape.
  struct Shape {
    EdgePath a;
    EdgePath b;
  };
  std::optional<Shape> as_quotient() const;

  std::string to_string(const Presentation& p) const;

  friend auto operator<=>(const FreeGroupWord&, const FreeGroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace ultragrade
