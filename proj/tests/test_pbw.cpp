#include <doctest.h>

#include <random>

#include "ehv/pbw.hpp"

using namespace ehv;

namespace {

const GeneratorOrder o31 = GeneratorOrder::order_31();
const GeneratorOrder o32 = GeneratorOrder::order_32();

UEElement mono(std::vector<Generator> w, const Scalar& c = Scalar(1)) {
  UEMonomial m;
  m.word = std::move(w);
  return UEElement::monomial(m, c);
}

}  // namespace

TEST_CASE("normalize fixed words") {
  // L2 * L-2 = L-2 L2 + 4 L0 + 1/2 C1
  UEMonomial c1;
  c1.central[0] = 1;
  UEElement expected = mono({L(-2), L(2)}) + mono({L(0)}, Scalar(4)) +
                       UEElement::monomial(c1, Scalar(Rational(1, 2)));
  CHECK(normalize(o31, {L(2), L(-2)}) == expected);

  CHECK(normalize(o31, {J(4)}) == mono({J(4)}));

  // [G1, G2] = 0: pure reorder
  CHECK(normalize(o31, {G(1), G(2)}) == mono({G(1), G(2)}));
  CHECK(normalize(o32, {G(2), G(1)}) == mono({G(1), G(2)}));
}

TEST_CASE("multiply") {
  UEElement x = normalize(o31, {L(-2), G(1), J(0)});
  CHECK(multiply(o31, UEElement::one(), x) == x);
  CHECK(multiply(o31, x, UEElement::one()) == x);

  UEElement comm = multiply(o31, normalize(o31, {L(2)}), normalize(o31, {L(-2)})) -
                   multiply(o31, normalize(o31, {L(-2)}), normalize(o31, {L(2)}));
  UEMonomial c1;
  c1.central[0] = 1;
  CHECK(comm == mono({L(0)}, Scalar(4)) +
                    UEElement::monomial(c1, Scalar(Rational(1, 2))));
}

TEST_CASE("commutator identity over a window") {
  const AlgebraSpec ehv;
  for (GenKind ka : {GenKind::L, GenKind::J, GenKind::G}) {
    for (GenKind kb : {GenKind::L, GenKind::J, GenKind::G}) {
      for (int m = -3; m <= 3; ++m) {
        for (int n = -3; n <= 3; ++n) {
          Generator x{ka, m}, y{kb, n};
          UEElement lhs = multiply(o31, normalize(o31, {x}), normalize(o31, {y})) -
                          multiply(o31, normalize(o31, {y}), normalize(o31, {x}));
          UEElement rhs;
          const LieElement br = bracket(ehv, x, y);
          for (const auto& [g, c] : br.terms()) {
            UEMonomial t;
            if (g.central()) {
              t.central[static_cast<int>(g.kind) - 3] = 1;
            } else {
              t.word = {g};
            }
            rhs.add(t, c);
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("random associativity, idempotence, filtration, round trip") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> len(1, 3), kind(0, 2), idx(-3, 3);
  auto random_word = [&] {
    std::vector<Generator> w;
    for (int i = len(rng); i > 0; --i) w.push_back({static_cast<GenKind>(kind(rng)), idx(rng)});
    return w;
  };
  for (int s = 0; s < 60; ++s) {
    auto wa = random_word(), wb = random_word(), wc = random_word();
    UEElement a = normalize(o31, wa), b = normalize(o31, wb), c = normalize(o31, wc);
    CHECK(multiply(o31, multiply(o31, a, b), c) ==
          multiply(o31, a, multiply(o31, b, c)));
    CHECK(normalize(o31, a) == a);
    CHECK(normalize(o31, normalize(o32, a)) == a);
    // filtration: output monomial length never exceeds input length
    for (const auto& [m, coeff] : a.terms()) CHECK(m.length() <= wa.size());
  }
}
