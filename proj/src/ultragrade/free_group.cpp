#include "ultragrade/free_group.hpp"

#include <algorithm>

namespace ultragrade {

FreeGroupWord FreeGroupWord::from_letters(const std::vector<Letter>& letters) {
  FreeGroupWord w;
  for (const auto& l : letters) {
    if (!w.letters_.empty() && w.letters_.back().edge == l.edge && w.letters_.back().inverse != l.inverse) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

FreeGroupWord FreeGroupWord::of_path(const EdgePath& a) { return quotient(a, {}); }

FreeGroupWord FreeGroupWord::quotient(const EdgePath& a, const EdgePath& b) {
  std::vector<Letter> ls;
  for (const auto& e : a) ls.push_back({e, false});
  for (auto it = b.rbegin(); it != b.rend(); ++it) ls.push_back({*it, true});
  return from_letters(ls);
}

FreeGroupWord FreeGroupWord::operator*(const FreeGroupWord& o) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return from_letters(ls);
}

FreeGroupWord FreeGroupWord::inverse() const {
  FreeGroupWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->edge, !it->inverse});
  return w;
}

std::optional<FreeGroupWord::Shape> FreeGroupWord::as_quotient() const {
  Shape s;
  std::size_t i = 0;
  while (i < letters_.size() && !letters_[i].inverse) s.a.push_back(letters_[i++].edge);
  std::vector<EdgeInst> neg;
  while (i < letters_.size() && letters_[i].inverse) neg.push_back(letters_[i++].edge);
  if (i != letters_.size()) return std::nullopt;
  s.b.assign(neg.rbegin(), neg.rend());
  return s;
}

std::string FreeGroupWord::to_string(const Presentation& p) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += p.edge_label(letters_[i].edge);
    if (letters_[i].inverse) out += "^-1";
  }
  return out;
}

}  // namespace ultragrade
