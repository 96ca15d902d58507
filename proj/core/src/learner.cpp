#include "antihorn/learner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "antihorn/poly.hpp"

namespace antihorn {

namespace {

// p(q(n)) for this world.
std::uint64_t censusAtBound(int n, const SparseWorld& world) {
  return world.census()(world.bound()(static_cast<std::uint64_t>(n)));
}

// (gamma \ {c' : c derives c'}) u {c} -- the update both adoption steps use.
AntiHornFormula adopt(const AntiHornFormula& gamma, const AntiHornClause& c) {
  std::vector<AntiHornClause> next;
  next.reserve(gamma.size() + 1);
  for (const AntiHornClause& g : gamma)
    if (!derives(c, g)) next.push_back(g);
  next.push_back(c);
  return AntiHornFormula(std::move(next));
}

}  // namespace

std::uint64_t clauseWeight(const AntiHornClause& c, int n, const SparseWorld& world) {
  const std::uint64_t k = static_cast<std::uint64_t>(world.k());
  if (c.rhsSize() > k)
    throw std::invalid_argument("weight: clause right-hand side exceeds k");
  const std::uint64_t base = checkedAdd(checkedPow(censusAtBound(n, world), k + 1), 1);
  return checkedPow(base, k - c.rhsSize());
}

std::uint64_t formulaWeight(const AntiHornFormula& f, int n, const SparseWorld& world) {
  std::uint64_t total = 0;
  for (const AntiHornClause& c : f) total = checkedAdd(total, clauseWeight(c, n, world));
  return total;
}

std::uint64_t gammaCapacity(int n, const SparseWorld& world) {
  return checkedPow(censusAtBound(n, world), static_cast<std::uint64_t>(world.k()) + 1);
}

std::uint64_t learnSatPassBound(int n, const SparseWorld& world) {
  return checkedPow(checkedAdd(gammaCapacity(n, world), 1), static_cast<std::uint64_t>(world.k()));
}

PackingChoice packingChoose(const LearnState& state, const SparseWorld& world) {
  const WordSet& s = world.sparseSet();
  const int k = world.k();
  const std::uint64_t p = censusAtBound(state.n, world);
  if (state.gamma.size() != gammaCapacity(state.n, world))
    throw std::invalid_argument("packing: working set is not exactly full");
  if (!satisfied(state.gamma, s))
    throw std::invalid_argument("packing: working set is not satisfied by the sparse set");
  for (const AntiHornClause& c : state.gamma)
    if (c.lhs() != state.z)
      throw std::invalid_argument("packing: working set mixes left-hand sides");

  // Cluster by right-hand cardinality and find the largest oversized one.
  std::vector<std::vector<const AntiHornClause*>> cluster(static_cast<std::size_t>(k) + 1);
  for (const AntiHornClause& c : state.gamma)
    cluster[c.rhsSize()].push_back(&c);
  int m_hat = 0;
  for (int m = 1; m <= k; ++m)
    if (cluster[static_cast<std::size_t>(m)].size() > checkedPow(p, static_cast<std::uint64_t>(m)))
      m_hat = m;
  if (m_hat == 0)
    throw std::logic_error("packing: no oversized cluster at full capacity");
  const auto& heavy = cluster[static_cast<std::size_t>(m_hat)];

  // Grow alpha one high-frequency word at a time until the next word would
  // cover less than a 1/p fraction of the clauses alpha still derives.
  std::vector<Word> alpha_rhs;
  std::vector<const AntiHornClause*> delta;
  while (true) {
    if (alpha_rhs.size() > static_cast<std::size_t>(k))
      throw std::logic_error("packing: cluster refinement failed to terminate");
    const AntiHornClause alpha(state.z, alpha_rhs);
    delta.clear();
    for (const AntiHornClause* g : heavy)
      if (derives(alpha, *g)) delta.push_back(g);
    std::map<Word, std::uint64_t> freq;
    for (const AntiHornClause* g : delta)
      for (const Word& w : g->rhs()) ++freq[w];
    const Word* best = nullptr;
    std::uint64_t best_count = 0;
    for (const auto& [w, count] : freq) {
      if (alpha.rhsContains(w)) continue;
      if (count > best_count) {  // ties keep the length-lex smaller word
        best = &w;
        best_count = count;
      }
    }
    if (best == nullptr)
      throw std::logic_error("packing: no extension word available");
    if (checkedMul(best_count, p) < delta.size()) break;  // best_count < |delta| / p
    alpha_rhs.push_back(*best);
  }
  if (delta.size() < 2)
    throw std::logic_error("packing: final cluster has fewer than two clauses");
  // Clause pointers follow the formula's canonical order, so the first two
  // are the length-lex smallest distinct pair.
  return PackingChoice{AntiHornClause(state.z, std::move(alpha_rhs)), *delta[0], *delta[1]};
}

std::string LearnTrace::text() const {
  std::string out;
  for (const Pass& p : passes) {
    out += "pass " + std::to_string(p.index);
    out += "  size=" + std::to_string(p.gamma_size);
    out += "  weight=" + std::to_string(p.weight);
    out += (p.action == Action::Pack) ? "  pack" : "  extend";
    out += "  " + p.chosen.str() + "\n";
  }
  return out;
}

AntiHornFormula learnSat(const SparseWorld& world, const TargetLanguage& target, int n,
                         const Word& z, const LearnOptions& opts) {
  if (&target.world() != &world)
    throw std::invalid_argument("learner: target oracle bound to a different world");
  if (n < 0 || n > world.nMax())
    throw std::out_of_range("learner: horizon beyond n_max");
  const std::uint64_t capacity = gammaCapacity(n, world);
  const std::uint64_t pass_bound = learnSatPassBound(n, world);

  LearnState st;
  st.z = z;
  st.n = n;
  st.gamma = AntiHornFormula({AntiHornClause(z, {z})});
  st.weight_trace.push_back(formulaWeight(st.gamma, n, world));
  if (opts.on_pass) opts.on_pass(st);

  for (std::uint64_t i = 0; i <= pass_bound; ++i) {
    const auto cex = smallestCounterexampleA(target, n, st.gamma);
    if (!cex) return st.gamma;

    // Adopt the canonically smallest clause of the counterexample's
    // reduction that nothing in the working set derives.  Such a clause
    // exists (the scan found one underived), and it necessarily carries
    // the left-hand side z: any clause with a different lhs is derived by
    // every clause of the working set.
    const AntiHornFormula& phi = world.reduction(*cex);
    const AntiHornClause* delta = nullptr;
    for (const AntiHornClause& d : phi) {
      if (!anyDerives(st.gamma, d)) {
        delta = &d;
        break;
      }
    }
    if (delta == nullptr)
      throw std::logic_error("learner: counterexample reduction fully derived");
    AntiHornClause adopted = *delta;
    st.gamma = adopt(st.gamma, adopted);

    bool packed = false;
    if (st.gamma.size() == capacity) {
      const PackingChoice choice = packingChoose(st, world);
      if (opts.on_pack) opts.on_pack(choice, st);
      st.gamma = adopt(st.gamma, choice.alpha);
      adopted = choice.alpha;
      packed = true;
    }

    ++st.pass_count;
    st.weight_trace.push_back(formulaWeight(st.gamma, n, world));
    if (opts.trace)
      opts.trace->passes.push_back({st.pass_count, st.gamma.size(), st.weight_trace.back(),
                                    packed ? LearnTrace::Action::Pack : LearnTrace::Action::Extend,
                                    adopted});
    if (opts.on_pass) opts.on_pass(st);
  }
  throw std::logic_error("learner: pass bound exhausted");
}

FormulaList learnAll(const SparseWorld& world, const TargetLanguage& target, int n,
                     const LearnAllOptions& opts) {
  if (&target.world() != &world)
    throw std::invalid_argument("learner: target oracle bound to a different world");
  if (n < 1 || n > world.nMax())
    throw std::out_of_range("learner: horizon outside [1, n_max]");

  std::vector<AntiHornFormula> list;
  for (int i = 1; i <= n; ++i) {
    list.clear();
    std::vector<Word> lhs_before;
    const std::uint64_t pass_bound = censusAtBound(i, world);  // p(q(i))
    std::uint64_t pass = 0;
    while (true) {
      const auto cex = smallestCounterexampleB(target, i, list);
      if (!cex) break;
      // Every pass must introduce a left-hand word from the sparse set that
      // the list lacks; the census of words up to q(i) caps the passes.
      if (++pass > pass_bound)
        throw std::logic_error("list learner: pass bound exceeded at level " + std::to_string(i));
      const std::vector<Word> added = lhsWords(world.reduction(*cex));
      for (const Word& v : added)
        list.push_back(learnSat(world, target, i, v, opts.inner));
      if (opts.on_pass)
        opts.on_pass(LearnAllPass{i, pass, *cex, added, lhs_before});
      lhs_before.insert(lhs_before.end(), added.begin(), added.end());
      std::sort(lhs_before.begin(), lhs_before.end());
      lhs_before.erase(std::unique(lhs_before.begin(), lhs_before.end()), lhs_before.end());
    }
    if (opts.on_level) opts.on_level(i, FormulaList{list, i});
  }
  return FormulaList{std::move(list), n};
}

bool forecast(const Word& x, const FormulaList& list, const SparseWorld& world) {
  if (x.size() > list.horizon)
    throw std::out_of_range("forecast: word beyond the list horizon");
  const AntiHornFormula& phi = world.reduction(x);
  for (const AntiHornFormula& g : list.formulas)
    if (!derives(g, phi)) return false;
  return true;
}

std::vector<bool> answerQueries(std::span<const Word> queries, const FormulaList& list,
                                const SparseWorld& world) {
  std::vector<bool> out;
  out.reserve(queries.size());
  for (const Word& q : queries) out.push_back(forecast(q, list, world));
  return out;
}

}  // namespace antihorn
