#include "ehv/exponents.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ehv {

ExponentVector ExponentVector::unit(int position) {
  ExponentVector v;
  v.add(position, 1);
  return v;
}

int ExponentVector::at(int position) const {
  auto it = entries_.find(position);
  return it == entries_.end() ? 0 : it->second;
}

void ExponentVector::add(int position, int delta) {
  if (position < 1) throw std::invalid_argument("position must be >= 1");
  int v = at(position) + delta;
  if (v < 0) throw std::invalid_argument("negative multiplicity");
  if (v == 0) {
    entries_.erase(position);
  } else {
    entries_[position] = v;
  }
}

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (const auto& [pos, mult] : o.entries_) r.add(pos, mult);
  return r;
}

ExponentVector ExponentVector::minus_unit(int position) const {
  ExponentVector r = *this;
  r.add(position, -1);
  return r;
}

long ExponentVector::weight() const {
  long w = 0;
  for (const auto& [pos, mult] : entries_) w += static_cast<long>(pos) * mult;
  return w;
}

long ExponentVector::size() const {
  long d = 0;
  for (const auto& [pos, mult] : entries_) d += mult;
  return d;
}

int ExponentVector::min_position() const {
  return entries_.empty() ? 0 : entries_.begin()->first;
}

int ExponentVector::max_position() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

std::string ExponentVector::str() const {
  std::ostringstream out;
  out << "[";
  int top = max_position();
  for (int s = 1; s <= top; ++s) {
    if (s > 1) out << ",";
    out << at(s);
  }
  out << "]";
  return out.str();
}

namespace {

Ordering from_cmp(int c) {
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Ordering from_long(long a, long b) {
  if (a < b) return Ordering::Less;
  if (a > b) return Ordering::Greater;
  return Ordering::Equal;
}

}  // namespace

Ordering compare_lex(const ExponentVector& a, const ExponentVector& b) {
  std::set<int, std::greater<int>> positions;
  for (const auto& [pos, _] : a.entries()) positions.insert(pos);
  for (const auto& [pos, _] : b.entries()) positions.insert(pos);
  for (int pos : positions) {
    if (a.at(pos) != b.at(pos)) return from_cmp(a.at(pos) - b.at(pos));
  }
  return Ordering::Equal;
}

Ordering compare_revlex(const ExponentVector& a, const ExponentVector& b) {
  std::set<int> positions;
  for (const auto& [pos, _] : a.entries()) positions.insert(pos);
  for (const auto& [pos, _] : b.entries()) positions.insert(pos);
  for (int pos : positions) {
    if (a.at(pos) != b.at(pos)) return from_cmp(a.at(pos) - b.at(pos));
  }
  return Ordering::Equal;
}

std::string ExpTriple::str() const {
  return "(" + first.str() + "," + second.str() + "," + third.str() + ")";
}

Ordering compare_principal_o(const ExpTriple& x, const ExpTriple& y) {
  if (auto c = from_long(x.total_weight(), y.total_weight()); c != Ordering::Equal) return c;
  if (auto c = from_long(x.first.weight(), y.first.weight()); c != Ordering::Equal) return c;
  if (auto c = compare_revlex(x.first, y.first); c != Ordering::Equal) return c;
  if (auto c = compare_revlex(x.second, y.second); c != Ordering::Equal) return c;
  return compare_revlex(x.third, y.third);
}

Ordering compare_principal_o_prime(const ExpTriple& x, const ExpTriple& y) {
  if (auto c = from_long(x.third.weight(), y.third.weight()); c != Ordering::Equal) return c;
  if (auto c = compare_revlex(x.third, y.third); c != Ordering::Equal) return c;
  if (auto c = compare_revlex(x.second, y.second); c != Ordering::Equal) return c;
  return compare_lex(x.first, y.first);
}

}  // namespace ehv
