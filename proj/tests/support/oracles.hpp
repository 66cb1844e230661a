#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here works on plain vectors and shares no code with core/.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doxepi/doxepi.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

inline Matrix empty_matrix(std::size_t n) { return Matrix(n, std::vector<bool>(n, false)); }

inline Matrix to_matrix(const doxepi::Relation& r) {
  Matrix m = empty_matrix(r.states());
  for (const auto& [s, t] : r.pairs()) m[s][t] = true;
  return m;
}

inline doxepi::Relation from_matrix(const doxepi::SpacePtr& space, const Matrix& m) {
  doxepi::Relation r(space);
  for (std::size_t s = 0; s < m.size(); ++s) {
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (m[s][t]) r.insert(s, t);
    }
  }
  return r;
}

/// Relation from the low n*n bits of a mask, bit s*n+t for (s, t).
inline Matrix matrix_from_mask(std::size_t n, std::uint64_t mask) {
  Matrix m = empty_matrix(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) m[s][t] = (mask >> (s * n + t)) & 1u;
  }
  return m;
}

inline Matrix compose(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out = empty_matrix(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t m = 0; m < n; ++m)
      if (a[s][m])
        for (std::size_t t = 0; t < n; ++t)
          if (b[m][t]) out[s][t] = true;
  return out;
}

inline Matrix unite(Matrix a, const Matrix& b) {
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = 0; t < a.size(); ++t) a[s][t] = a[s][t] || b[s][t];
  return a;
}

inline Matrix converse(const Matrix& a) {
  Matrix out = empty_matrix(a.size());
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = 0; t < a.size(); ++t) out[t][s] = a[s][t];
  return out;
}

inline Matrix identity(std::size_t n) {
  Matrix m = empty_matrix(n);
  for (std::size_t s = 0; s < n; ++s) m[s][s] = true;
  return m;
}

/// R⁺ by iterating R := R ∪ R∘R to a fixpoint.
inline Matrix transitive_closure(Matrix r) {
  for (;;) {
    Matrix next = unite(r, compose(r, r));
    if (next == r) return r;
    r = std::move(next);
  }
}

inline bool serial(const Matrix& r) {
  for (const auto& row : r) {
    bool any = false;
    for (bool b : row) any = any || b;
    if (!any) return false;
  }
  return true;
}

inline bool reflexive(const Matrix& r) {
  for (std::size_t s = 0; s < r.size(); ++s)
    if (!r[s][s]) return false;
  return true;
}

inline bool symmetric(const Matrix& r) { return r == converse(r); }

inline bool transitive(const Matrix& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (r[a][b] && r[b][c] && !r[a][c]) return false;
  return true;
}

inline bool euclidean(const Matrix& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (r[a][b] && r[a][c] && !r[b][c]) return false;
  return true;
}

inline bool nonempty(const Matrix& r) {
  for (const auto& row : r)
    for (bool b : row)
      if (b) return true;
  return false;
}

inline bool equivalence(const Matrix& r) { return reflexive(r) && symmetric(r) && transitive(r); }

/// Every equivalence relation on n states, one per set partition.
inline std::vector<Matrix> all_equivalences(std::size_t n) {
  std::vector<Matrix> out;
  std::vector<std::size_t> block(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      Matrix m = empty_matrix(n);
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) m[s][t] = block[s] == block[t];
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      block[i] = b;
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(0, 0);
  return out;
}

/// Intersection of every equivalence containing r: the smallest one, by brute force.
inline Matrix smallest_equivalence_brute(const Matrix& r) {
  const std::size_t n = r.size();
  Matrix best(n, std::vector<bool>(n, true));
  for (const auto& e : all_equivalences(n)) {
    bool contains = true;
    for (std::size_t s = 0; s < n && contains; ++s)
      for (std::size_t t = 0; t < n && contains; ++t)
        if (r[s][t] && !e[s][t]) contains = false;
    if (!contains) continue;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) best[s][t] = best[s][t] && e[s][t];
  }
  return best;
}

/// Raw function pair: f total, g defined where g[i] != kNone.
struct RawPair {
  std::vector<std::size_t> f;
  std::vector<std::size_t> g;
};

inline Matrix doxastic(const RawPair& p) {
  const std::size_t n = p.f.size();
  Matrix m = empty_matrix(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) m[s][t] = p.g[p.f[s]] == p.f[t];
  return m;
}

/// s E t iff a non-empty D/D⁻¹ path joins them, found by breadth-first search.
inline Matrix epistemic(const RawPair& p) {
  const Matrix d = doxastic(p);
  const std::size_t n = d.size();
  Matrix e = empty_matrix(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> frontier;
    for (std::size_t t = 0; t < n; ++t) {
      if ((d[s][t] || d[t][s]) && !e[s][t]) {
        e[s][t] = true;
        frontier.push_back(t);
      }
    }
    while (!frontier.empty()) {
      const std::size_t u = frontier.back();
      frontier.pop_back();
      for (std::size_t t = 0; t < n; ++t) {
        if ((d[u][t] || d[t][u]) && !e[s][t]) {
          e[s][t] = true;
          frontier.push_back(t);
        }
      }
    }
  }
  return e;
}

inline std::set<std::size_t> image_of(const std::vector<std::size_t>& f) { return {f.begin(), f.end()}; }

inline bool unbiased(const RawPair& p) {
  for (std::size_t v : image_of(p.f))
    if (p.g[v] != v) return false;
  return true;
}

inline bool injective_on_image(const RawPair& p) {
  std::set<std::size_t> seen;
  for (std::size_t v : image_of(p.f))
    if (!seen.insert(p.g[v]).second) return false;
  return true;
}

/// Random total f and an idempotent g on Im(f): pick fixed points inside the
/// image, send every other visible state to one of them.
inline RawPair random_pair(std::size_t n, std::mt19937_64& rng) {
  RawPair p;
  p.f.resize(n);
  for (auto& v : p.f) v = rng() % n;
  const auto img = image_of(p.f);
  const std::vector<std::size_t> visible(img.begin(), img.end());
  std::vector<std::size_t> fixed;
  for (std::size_t v : visible)
    if (rng() % 2 == 0) fixed.push_back(v);
  if (fixed.empty()) fixed.push_back(visible[rng() % visible.size()]);
  const std::set<std::size_t> fixed_set(fixed.begin(), fixed.end());
  p.g.assign(n, kNone);
  for (std::size_t v : visible) p.g[v] = fixed_set.count(v) ? v : fixed[rng() % fixed.size()];
  return p;
}

/// f = id and a random idempotent g on the whole space.
inline RawPair random_identity_visibility_pair(std::size_t n, std::mt19937_64& rng) {
  RawPair p;
  std::vector<std::size_t> fixed;
  for (std::size_t k = 0; k < n; ++k) {
    p.f.push_back(k);
    if (k == 0 || rng() % 2 == 0) fixed.push_back(k);
  }
  const std::set<std::size_t> fixed_set(fixed.begin(), fixed.end());
  for (std::size_t k = 0; k < n; ++k) p.g.push_back(fixed_set.count(k) ? k : fixed[rng() % fixed.size()]);
  return p;
}

/// Every (f, g) with f total on n states and g an idempotent map Im(f) → Im(f).
inline std::vector<RawPair> all_pairs(std::size_t n) {
  std::vector<RawPair> out;
  std::size_t total_f = 1;
  for (std::size_t i = 0; i < n; ++i) total_f *= n;
  for (std::size_t code = 0; code < total_f; ++code) {
    RawPair base;
    base.f.resize(n);
    std::size_t c = code;
    for (std::size_t s = 0; s < n; ++s) {
      base.f[s] = c % n;
      c /= n;
    }
    const auto img = image_of(base.f);
    const std::vector<std::size_t> visible(img.begin(), img.end());
    const std::size_t k = visible.size();
    std::size_t total_g = 1;
    for (std::size_t i = 0; i < k; ++i) total_g *= k;
    for (std::size_t gc = 0; gc < total_g; ++gc) {
      RawPair p = base;
      p.g.assign(n, kNone);
      std::size_t x = gc;
      for (std::size_t v : visible) {
        p.g[v] = visible[x % k];
        x /= k;
      }
      bool idem = true;
      for (std::size_t v : visible) idem = idem && p.g[p.g[v]] == p.g[v];
      if (idem) out.push_back(std::move(p));
    }
  }
  return out;
}

inline doxepi::FunctionPair to_pair(const doxepi::SpacePtr& space, const RawPair& p) {
  using doxepi::StateFunction;
  doxepi::StateSet domain(space->size());
  std::vector<std::size_t> g(space->size(), StateFunction::kUndefined);
  for (std::size_t s = 0; s < p.g.size(); ++s) {
    if (p.g[s] != kNone) {
      domain.insert(s);
      g[s] = p.g[s];
    }
  }
  auto out = doxepi::validate_pair(StateFunction::total(space, p.f), StateFunction(space, domain, g));
  return std::move(out).value();
}

// ---------------------------------------------------------------------------
// Naive satisfaction: recursion per (state, formula), relations recomputed
// from the raw functions, no memo and no set algebra.

struct NaiveModel {
  std::size_t n = 0;
  std::map<std::string, std::set<std::size_t>> valuation;
  std::map<std::string, RawPair> belief;
  std::map<std::string, RawPair> knowledge;
};

inline bool reach(const Matrix& r, std::size_t s, std::size_t t, bool reflexive_closure) {
  if (reflexive_closure && s == t) return true;
  return transitive_closure(r)[s][t];
}

inline Matrix group_matrix(const NaiveModel& m, const doxepi::Formula& phi) {
  using K = doxepi::Formula::Kind;
  const bool belief = phi.kind == K::kDistBelief || phi.kind == K::kCommonBelief;
  const bool distributed = phi.kind == K::kDistBelief || phi.kind == K::kDistKnowledge;
  Matrix acc = distributed ? Matrix(m.n, std::vector<bool>(m.n, true)) : empty_matrix(m.n);
  for (const auto& l : phi.labels) {
    const Matrix r = belief ? doxastic(m.belief.at(l)) : epistemic(m.knowledge.at(l));
    for (std::size_t s = 0; s < m.n; ++s)
      for (std::size_t t = 0; t < m.n; ++t) acc[s][t] = distributed ? acc[s][t] && r[s][t] : acc[s][t] || r[s][t];
  }
  if (distributed) return acc;
  Matrix closed = transitive_closure(acc);
  if (!belief) closed = unite(closed, identity(m.n));
  return closed;
}

inline bool sat(const NaiveModel& m, const doxepi::Formula& phi, std::size_t s) {
  using K = doxepi::Formula::Kind;
  switch (phi.kind) {
    case K::kAtom: return m.valuation.at(phi.atom).count(s) > 0;
    case K::kBottom: return false;
    case K::kNot: return !sat(m, *phi.children[0], s);
    case K::kAnd: return sat(m, *phi.children[0], s) && sat(m, *phi.children[1], s);
    case K::kOr: return sat(m, *phi.children[0], s) || sat(m, *phi.children[1], s);
    case K::kImplies: return !sat(m, *phi.children[0], s) || sat(m, *phi.children[1], s);
    case K::kIff: return sat(m, *phi.children[0], s) == sat(m, *phi.children[1], s);
    case K::kBelief: {
      const RawPair& p = m.belief.at(phi.labels[0]);
      for (std::size_t t = 0; t < m.n; ++t)
        if (p.g[p.f[s]] == p.f[t] && !sat(m, *phi.children[0], t)) return false;
      return true;
    }
    case K::kKnowledge: {
      const Matrix e = epistemic(m.knowledge.at(phi.labels[0]));
      for (std::size_t t = 0; t < m.n; ++t)
        if (e[s][t] && !sat(m, *phi.children[0], t)) return false;
      return true;
    }
    default: {
      const Matrix r = group_matrix(m, phi);
      for (std::size_t t = 0; t < m.n; ++t)
        if (r[s][t] && !sat(m, *phi.children[0], t)) return false;
      return true;
    }
  }
}

// ---------------------------------------------------------------------------

/// Random model document in the JSON model format, plus its naive twin.
struct RandomModel {
  std::string json;
  NaiveModel naive;
};

inline RandomModel random_model(std::mt19937_64& rng, std::size_t max_states = 5, std::size_t max_atoms = 3,
                                std::size_t max_labels = 2) {
  RandomModel out;
  const std::size_t n = 1 + rng() % max_states;
  const std::size_t atoms = 1 + rng() % max_atoms;
  const std::size_t labels = 1 + rng() % max_labels;
  out.naive.n = n;

  auto st = [](std::size_t s) { return "\"s" + std::to_string(s) + "\""; };
  std::string doc = "{\"states\": [";
  for (std::size_t s = 0; s < n; ++s) doc += (s ? ", " : "") + st(s);
  doc += "], \"types\": {";
  std::string functions, belief, knowledge;
  for (std::size_t l = 0; l < labels; ++l) {
    const std::string agent = std::string(1, static_cast<char>('a' + l));
    RawPair p = random_pair(n, rng);
    out.naive.belief[agent] = p;
    out.naive.knowledge[agent] = p;
    const auto img = image_of(p.f);
    const std::string type = "V" + agent;
    doc += std::string(l ? ", " : "") + "\"" + type + "\": [";
    bool first = true;
    for (std::size_t v : img) {
      doc += (first ? "" : ", ") + st(v);
      first = false;
    }
    doc += "]";
    functions += std::string(l ? ", " : "") + "\"f" + agent + "\": {\"domain\": \"S\", \"codomain\": \"" + type +
                 "\", \"map\": {";
    for (std::size_t s = 0; s < n; ++s) functions += (s ? ", " : "") + st(s) + ": " + st(p.f[s]);
    functions += "}}, \"g" + agent + "\": {\"domain\": \"" + type + "\", \"codomain\": \"" + type + "\", \"map\": {";
    first = true;
    for (std::size_t v : img) {
      functions += (first ? "" : ", ") + st(v) + ": " + st(p.g[v]);
      first = false;
    }
    functions += "}}";
    belief += std::string(l ? ", " : "") + "\"" + agent + "\": [\"f" + agent + "\", \"g" + agent + "\"]";
  }
  knowledge = belief;
  doc += "}, \"functions\": {" + functions + "}, \"belief_labels\": {" + belief + "}, \"knowledge_labels\": {" +
         knowledge + "}, \"valuation\": {";
  for (std::size_t a = 0; a < atoms; ++a) {
    const std::string name = std::string(1, static_cast<char>('p' + a));
    auto& set = out.naive.valuation[name];
    doc += std::string(a ? ", " : "") + "\"" + name + "\": [";
    bool first = true;
    for (std::size_t s = 0; s < n; ++s) {
      if (rng() % 2) {
        set.insert(s);
        doc += (first ? "" : ", ") + st(s);
        first = false;
      }
    }
    doc += "]";
  }
  doc += "}}";
  out.json = std::move(doc);
  return out;
}

/// Random formula over the naive model's atoms and labels.
inline doxepi::FormulaPtr random_formula(const NaiveModel& m, std::size_t depth, std::mt19937_64& rng,
                                         bool groups = true) {
  namespace f = doxepi::fml;
  std::vector<std::string> atoms, agents;
  for (const auto& [a, _] : m.valuation) atoms.push_back(a);
  for (const auto& [a, _] : m.belief) agents.push_back(a);
  if (depth == 0 || rng() % 5 == 0) {
    return rng() % 8 == 0 ? f::bottom() : f::atom(atoms[rng() % atoms.size()]);
  }
  auto sub = [&] { return random_formula(m, depth - 1, rng, groups); };
  const std::string agent = agents[rng() % agents.size()];
  switch (rng() % (groups ? 10 : 8)) {
    case 0: return f::neg(sub());
    case 1: return f::conj(sub(), sub());
    case 2: return f::disj(sub(), sub());
    case 3: return f::implies(sub(), sub());
    case 4: return f::iff(sub(), sub());
    case 5:
    case 6: return f::belief(agent, sub());
    case 7: return f::knowledge(agent, sub());
    default: {
      using K = doxepi::Formula::Kind;
      const K kinds[] = {K::kDistBelief, K::kCommonBelief, K::kDistKnowledge, K::kCommonKnowledge};
      std::vector<std::string> group;
      for (const auto& a : agents)
        if (rng() % 2) group.push_back(a);
      if (group.empty()) group.push_back(agent);
      return f::group(kinds[rng() % 4], group, sub());
    }
  }
}

}  // namespace oracle
