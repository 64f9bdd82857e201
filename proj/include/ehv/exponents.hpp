#pragma once

#include <map>
#include <string>

namespace ehv {

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

// Finitely supported vector over positions 1,2,3,... with nonnegative
// integer multiplicities. Zero multiplicities are never stored.
class ExponentVector {
 public:
  ExponentVector() = default;

  static ExponentVector unit(int position);  // epsilon_position

  int at(int position) const;
  void add(int position, int delta);  // throws if a multiplicity goes negative
  ExponentVector plus(const ExponentVector& o) const;
  ExponentVector minus_unit(int position) const;

  long weight() const;  // sum over positions s of s * multiplicity
  long size() const;    // sum of multiplicities

  bool is_zero() const { return entries_.empty(); }
  int min_position() const;  // smallest position with nonzero entry; 0 if zero
  int max_position() const;  // largest such position; 0 if zero

  bool operator==(const ExponentVector& o) const = default;

  const std::map<int, int>& entries() const { return entries_; }

  // Textual form [i1,i2,...] listing multiplicities from position 1.
  std::string str() const;

 private:
  std::map<int, int> entries_;
};

// Lexicographical order: the highest differing position decides.
Ordering compare_lex(const ExponentVector& a, const ExponentVector& b);
// Reverse lexicographical order: the lowest differing position decides.
Ordering compare_revlex(const ExponentVector& a, const ExponentVector& b);

struct ExpTriple {
  ExponentVector first, second, third;
  bool operator==(const ExpTriple& o) const = default;
  bool is_zero() const {
    return first.is_zero() && second.is_zero() && third.is_zero();
  }
  long total_weight() const {
    return first.weight() + second.weight() + third.weight();
  }
  std::string str() const;
};

// Principal total order (o) on triples (k,i,j): compares by total weight
// w(k+i+j), then w(k), then k, i, j by revlex.
Ordering compare_principal_o(const ExpTriple& x, const ExpTriple& y);

// Principal total order (o') on triples (a,b,c): compares by w(c), then c
// and b by revlex, then a by lex.
Ordering compare_principal_o_prime(const ExpTriple& x, const ExpTriple& y);

enum class PrincipalOrderKind { lex, revlex, principal_o, principal_o_prime };

}  // namespace ehv
