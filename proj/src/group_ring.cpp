#include "torcoh/group_ring.hpp"

#include <algorithm>

#include "torcoh/dense.hpp"

namespace torcoh {

Word reduce_word(const Word& w) {
  Word out;
  for (int letter : w) {
    if (letter == 0) fail(Errc::validate, "word letter 0 is not a generator");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word concat_words(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce_word(out);
}

void GroupRingElement::normalize() {
  for (auto& [w, c] : terms) w = reduce_word(w);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Word, Int>> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  terms = std::move(out);
}

GroupRingElement GroupRingElement::unit() { return of(Word{}); }

GroupRingElement GroupRingElement::generator(int g) {
  if (g < 1) fail(Errc::bad_argument, "generator index must be >= 1");
  return of(Word{g});
}

GroupRingElement GroupRingElement::of(const Word& w, const Int& c) {
  GroupRingElement e;
  if (c != 0) e.terms.emplace_back(reduce_word(w), c);
  return e;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r;
  r.terms = terms;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  r.normalize();
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement neg = o;
  for (auto& [w, c] : neg.terms) c = -c;
  return *this + neg;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const { return terms == o.terms; }

void GroupRingComplex::validate() const {
  if (num_generators < 0) fail(Errc::validate, "negative generator count");
  if (!generator_names.empty() &&
      static_cast<int>(generator_names.size()) != num_generators)
    fail(Errc::validate, "generator_names size disagrees with num_generators");
  if (basis_sizes.empty()) fail(Errc::validate, "complex needs at least one degree");
  for (int s : basis_sizes)
    if (s < 0) fail(Errc::validate, "negative basis size");
  if (boundaries.size() + 1 != basis_sizes.size())
    fail(Errc::validate, "boundary count must be one less than degree count");
  for (std::size_t q = 0; q < boundaries.size(); ++q) {
    const auto& b = boundaries[q];
    if (static_cast<int>(b.size()) != basis_sizes[q])
      fail(Errc::validate, "boundary " + std::to_string(q) + " row count mismatch");
    for (const auto& row : b) {
      if (static_cast<int>(row.size()) != basis_sizes[q + 1])
        fail(Errc::validate, "boundary " + std::to_string(q) + " column count mismatch");
      for (const auto& el : row)
        for (const auto& [w, c] : el.terms) {
          if (c == 0) fail(Errc::validate, "unnormalized group-ring term with zero coefficient");
          for (int letter : w) {
            int g = letter > 0 ? letter : -letter;
            if (g < 1 || g > num_generators)
              fail(Errc::validate, "word uses generator " + std::to_string(g) +
                                       " outside the declared alphabet");
          }
        }
    }
  }
}

void CoeffModule::validate(int expect_generators, bool check_unimodular, const Caps& caps) const {
  if (rank < 0) fail(Errc::validate, "negative module rank");
  if (static_cast<int>(action.size()) != expect_generators)
    fail(Errc::validate, "module provides " + std::to_string(action.size()) +
                             " generator actions, complex needs " +
                             std::to_string(expect_generators));
  for (const auto& m : action) {
    if (m.rows() != rank || m.cols() != rank)
      fail(Errc::validate, "module action matrix is not rank x rank");
    if (check_unimodular && rank > 0) {
      Int d = bareiss_det(to_dense(m), caps);
      if (d != 1 && d != -1)
        fail(Errc::validate, "module action matrix has det " + d.get_str() + ", want a unit");
    }
  }
}

CoeffModule direct_sum(const CoeffModule& a, const CoeffModule& b) {
  if (a.action.size() != b.action.size())
    fail(Errc::validate, "direct sum needs modules over the same generator set");
  CoeffModule s;
  s.rank = a.rank + b.rank;
  for (std::size_t g = 0; g < a.action.size(); ++g) {
    SparseIntMatrix m(s.rank, s.rank);
    m.add_block(0, 0, a.action[g]);
    m.add_block(a.rank, a.rank, b.action[g]);
    s.action.push_back(std::move(m));
  }
  return s;
}

CoeffModule trivial_module(int num_generators) {
  CoeffModule m;
  m.rank = 1;
  m.action.assign(static_cast<std::size_t>(num_generators), SparseIntMatrix::identity(1));
  return m;
}

}  // namespace torcoh
