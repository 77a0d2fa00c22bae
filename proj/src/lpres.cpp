#include "lpg/lpres.hpp"

#include <map>
#include <stdexcept>
#include <unordered_set>

namespace lpg {

std::vector<FreeWord> dedup_relators(const std::vector<FreeWord>& words) {
  std::vector<FreeWord> out;
  std::unordered_set<FreeWord, FreeWordHash> seen;
  for (const auto& w : words) {
    if (w.is_identity()) continue;
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

LPresentation::LPresentation(Alphabet alphabet, std::vector<FreeWord> fixed,
                             std::vector<Substitution> substitutions, std::vector<FreeWord> iterated,
                             bool invariant)
    : alphabet_(std::move(alphabet)),
      fixed_(dedup_relators(fixed)),
      substitutions_(std::move(substitutions)),
      iterated_(dedup_relators(iterated)),
      invariant_(invariant || fixed_.empty()) {
  const std::size_t n = alphabet_.size();
  for (const auto& w : fixed_)
    if (w.rank() != n) throw std::invalid_argument("fixed relator over wrong alphabet");
  for (const auto& w : iterated_)
    if (w.rank() != n) throw std::invalid_argument("iterated relator over wrong alphabet");
  for (const auto& s : substitutions_)
    if (s.map.rank() != n) throw std::invalid_argument("substitution '" + s.name + "' over wrong alphabet");
}

PhiBall phi_ball(const LPresentation& L, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  PhiBall ball;
  ball.depth = depth;
  std::map<std::vector<FreeWord>, std::size_t> seen;
  auto id = FreeEndomorphism::identity(L.rank());
  seen.emplace(id.images(), 0);
  ball.elements.push_back({{}, std::move(id)});
  std::size_t frontier_begin = 0;
  for (int level = 1; level <= depth; ++level) {
    std::size_t frontier_end = ball.elements.size();
    for (std::size_t e = frontier_begin; e < frontier_end; ++e) {
      for (std::size_t s = 0; s < L.substitutions().size(); ++s) {
        auto map = compose(L.substitutions()[s].map, ball.elements[e].map);
        if (seen.count(map.images())) continue;
        seen.emplace(map.images(), ball.elements.size());
        std::vector<int> label{static_cast<int>(s)};
        label.insert(label.end(), ball.elements[e].label.begin(), ball.elements[e].label.end());
        ball.elements.push_back({std::move(label), std::move(map)});
      }
    }
    if (frontier_end == ball.elements.size()) break;
    frontier_begin = frontier_end;
  }
  return ball;
}

FinitePresentation truncate(const LPresentation& L, int depth) {
  std::vector<FreeWord> rels = L.fixed_relators();
  if (!L.iterated_relators().empty()) {
    PhiBall ball = phi_ball(L, depth);
    for (const auto& e : ball.elements)
      for (const auto& r : L.iterated_relators()) rels.push_back(apply(e.map, r));
  }
  return FinitePresentation{L.alphabet(), dedup_relators(rels)};
}

namespace {

FreeWord word_of(std::size_t rank, std::initializer_list<Letter> ls) { return FreeWord::reduce(rank, ls); }

}  // namespace

LPresentation preset_grigorchuk() {
  Alphabet X({"a", "b", "c", "d"});
  const std::size_t n = 4;
  const Letter a = 1, b = 2, c = 3, d = 4;
  std::vector<FreeWord> Q = {word_of(n, {a, a}), word_of(n, {b, b}), word_of(n, {c, c}), word_of(n, {d, d}),
                             word_of(n, {b, c, d})};
  std::vector<FreeWord> R = {power(word_of(n, {a, d}), 4L), power(word_of(n, {a, d, a, c, a, c}), 4L)};
  FreeEndomorphism sigma({word_of(n, {a, c, a}), word_of(n, {d}), word_of(n, {b}), word_of(n, {c})});
  return LPresentation(std::move(X), std::move(Q), {{"sigma", std::move(sigma)}}, std::move(R), true);
}

LPresentation preset_gamma(int d) {
  if (d < 3) throw std::invalid_argument("preset_gamma requires d >= 3");
  Alphabet X({"alpha", "rho"});
  const std::size_t n = 2;
  const FreeWord alpha = FreeWord::generator(n, 1);
  const FreeWord rho = FreeWord::generator(n, 2);
  auto mod = [d](int i) { return ((i % d) + d) % d; };
  // sigma_i = rho^(alpha^i), indices read mod d
  auto sigma = [&](int i) { return conjugate(rho, power(alpha, static_cast<long>(mod(i)))); };

  std::vector<FreeWord> R;
  R.push_back(power(alpha, static_cast<long>(d)));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      int diff = i > j ? i - j : j - i;
      if (diff < 2 || diff > d - 2) continue;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          auto u = conjugate(sigma(i), power(sigma(i - 1), static_cast<long>(k)));
          auto v = conjugate(sigma(j), power(sigma(j - 1), static_cast<long>(l)));
          R.push_back(commutator(u, v));
        }
    }
  for (int i = 1; i <= d; ++i)
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) {
        auto left = invert(conjugate(sigma(i), power(sigma(i - 1), static_cast<long>(k + 1))));
        auto t = power(sigma(i - 1), static_cast<long>(k)) *
                 conjugate(sigma(i - 1), power(sigma(i - 2), static_cast<long>(l)));
        R.push_back(left * conjugate(sigma(i), t));
      }
  // phi: alpha -> rho^(alpha^-1), rho -> rho
  FreeEndomorphism phi({conjugate(rho, invert(alpha)), rho});
  return LPresentation(std::move(X), {}, {{"phi", std::move(phi)}}, std::move(R), true);
}

}  // namespace lpg
