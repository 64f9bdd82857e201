#include "ehv/pbw.hpp"

#include <sstream>

namespace ehv {

std::string UEMonomial::str() const {
  if (is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& g : word) {
    if (!first) out << "*";
    first = false;
    out << g.str();
  }
  for (int i = 0; i < 3; ++i) {
    for (int e = 0; e < central[i]; ++e) {
      if (!first) out << "*";
      first = false;
      out << "C" << (i + 1);
    }
  }
  return out.str();
}

UEElement UEElement::monomial(UEMonomial m, const Scalar& coeff) {
  UEElement e;
  e.add(m, coeff);
  return e;
}

void UEElement::add(const UEMonomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEElement& UEElement::operator+=(const UEElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

UEElement& UEElement::operator-=(const UEElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

UEElement UEElement::operator+(const UEElement& o) const {
  UEElement r = *this;
  r += o;
  return r;
}

UEElement UEElement::operator-(const UEElement& o) const {
  UEElement r = *this;
  r -= o;
  return r;
}

UEElement UEElement::operator*(const Scalar& s) const {
  UEElement r;
  for (const auto& [m, c] : terms_) r.add(m, c * s);
  return r;
}

std::string UEElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (c == Scalar(1)) {
      out << m.str();
    } else if (c.terms().size() > 1) {
      out << "(" << c.str() << ")*" << m.str();
    } else {
      out << c.str() << "*" << m.str();
    }
  }
  return out.str();
}

namespace {

struct PendingTerm {
  Scalar coeff;
  std::vector<Generator> word;
  std::array<int, 3> central;
};

}  // namespace

UEElement normalize(const GeneratorOrder& order, const std::vector<Generator>& word,
                    const Scalar& coeff) {
  static const AlgebraSpec kEhv{};
  UEElement result;
  if (coeff.is_zero()) return result;

  PendingTerm seed{coeff, {}, {0, 0, 0}};
  for (const auto& g : word) {
    if (g.central()) {
      ++seed.central[static_cast<int>(g.kind) - 3];
    } else {
      seed.word.push_back(g);
    }
  }

  std::vector<PendingTerm> work{std::move(seed)};
  while (!work.empty()) {
    PendingTerm t = std::move(work.back());
    work.pop_back();

    std::size_t i = 0;
    while (i + 1 < t.word.size() && order.sorted_pair(t.word[i], t.word[i + 1])) ++i;
    if (i + 1 >= t.word.size()) {
      result.add({std::move(t.word), t.central}, t.coeff);
      continue;
    }

    // Correction terms from [x, y], one per bracket summand.
    const LieElement corr = bracket(kEhv, t.word[i], t.word[i + 1]);
    for (const auto& [g, c] : corr.terms()) {
      PendingTerm u;
      u.coeff = t.coeff * c;
      u.central = t.central;
      u.word.reserve(t.word.size() - 1);
      u.word.insert(u.word.end(), t.word.begin(), t.word.begin() + i);
      if (g.central()) {
        ++u.central[static_cast<int>(g.kind) - 3];
      } else {
        u.word.push_back(g);
      }
      u.word.insert(u.word.end(), t.word.begin() + i + 2, t.word.end());
      work.push_back(std::move(u));
    }
    std::swap(t.word[i], t.word[i + 1]);
    work.push_back(std::move(t));
  }
  return result;
}

UEElement normalize(const GeneratorOrder& order, const UEElement& e) {
  UEElement result;
  for (const auto& [m, c] : e.terms()) {
    UEElement part = normalize(order, m.word, c);
    for (const auto& [pm, pc] : part.terms()) {
      UEMonomial shifted = pm;
      for (int i = 0; i < 3; ++i) shifted.central[i] += m.central[i];
      result.add(shifted, pc);
    }
  }
  return result;
}

UEElement multiply(const GeneratorOrder& order, const UEElement& a, const UEElement& b) {
  UEElement result;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<Generator> w = ma.word;
      w.insert(w.end(), mb.word.begin(), mb.word.end());
      UEElement part = normalize(order, w, ca * cb);
      for (const auto& [pm, pc] : part.terms()) {
        UEMonomial shifted = pm;
        for (int i = 0; i < 3; ++i) {
          shifted.central[i] += ma.central[i] + mb.central[i];
        }
        result.add(shifted, pc);
      }
    }
  }
  return result;
}

}  // namespace ehv
