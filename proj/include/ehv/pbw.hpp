#pragma once

#include <array>
#include <vector>

#include "ehv/algebra.hpp"

namespace ehv {

// Total order on the non-central generators: block by kind, then ascending
// index within a block. order_31 sorts words as L-block, G-block, J-block
// (the "L^k G^i J^j" shape); order_32 as G-block, J-block, L-block
// ("G^a J^b L^c"). Central generators are not kept in words at all.
struct GeneratorOrder {
  std::array<int, 3> block_rank{};  // indexed by GenKind L, J, G

  std::pair<int, int> key(const Generator& g) const {
    return {block_rank[static_cast<int>(g.kind)], g.index};
  }
  bool sorted_pair(const Generator& a, const Generator& b) const {
    return key(a) <= key(b);
  }

  static GeneratorOrder order_31() { return {{0, 2, 1}}; }  // L < G < J
  static GeneratorOrder order_32() { return {{2, 1, 0}}; }  // G < J < L
};

// PBW basis monomial: a sorted word of non-central generators plus the
// multiplicities of the (mutually commuting) central generators C1..C3.
struct UEMonomial {
  std::vector<Generator> word;
  std::array<int, 3> central{0, 0, 0};

  auto operator<=>(const UEMonomial&) const = default;
  bool is_unit() const {
    return word.empty() && central == std::array<int, 3>{0, 0, 0};
  }
  std::size_t length() const { return word.size(); }
  std::string str() const;
};

class UEElement {
 public:
  UEElement() = default;

  static UEElement one() { return monomial(UEMonomial{}); }
  static UEElement monomial(UEMonomial m, const Scalar& coeff = Scalar(1));

  void add(const UEMonomial& m, const Scalar& coeff);
  UEElement& operator+=(const UEElement& o);
  UEElement& operator-=(const UEElement& o);
  UEElement operator+(const UEElement& o) const;
  UEElement operator-(const UEElement& o) const;
  UEElement operator*(const Scalar& s) const;

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const UEElement& o) const { return terms_ == o.terms_; }

  const std::map<UEMonomial, Scalar>& terms() const { return terms_; }
  std::string str() const;

 private:
  std::map<UEMonomial, Scalar> terms_;
};

// PBW normal form of a generator word via x*y -> y*x + [x,y] on the leftmost
// out-of-order adjacent pair; brackets are the symbolic EHV table.
UEElement normalize(const GeneratorOrder& order, const std::vector<Generator>& word,
                    const Scalar& coeff = Scalar(1));

// Re-expresses an element in the PBW basis of the given order.
UEElement normalize(const GeneratorOrder& order, const UEElement& e);

UEElement multiply(const GeneratorOrder& order, const UEElement& a, const UEElement& b);

}  // namespace ehv
