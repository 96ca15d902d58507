#include "antihorn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "antihorn/claims.hpp"
#include "antihorn/gf2m.hpp"
#include "antihorn/learner.hpp"
#include "antihorn/recovery.hpp"
#include "antihorn/transform.hpp"
#include "hashing.hpp"

namespace antihorn {

namespace {

constexpr std::uint64_t kSaltWorld = 0x776f726c64u;
constexpr std::uint64_t kSaltWorldSeed = 0x7773656564u;
constexpr std::uint64_t kSaltTransform = 0x7472616e73u;
constexpr std::uint64_t kSaltRecover = 0x7265636f76u;
constexpr std::uint64_t kSaltField = 0x6669656c64u;

using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string indexId(const char* prefix, int i, int width = 3) {
  std::string digits = std::to_string(i);
  if (static_cast<int>(digits.size()) < width)
    digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  return std::string(prefix) + "-" + digits;
}

// Runs body(i) for every index, optionally on a small worker pool.  Results
// must be keyed by index on the caller's side, so the outcome is identical
// for every worker count.
void forEachIndex(int count, int jobs, const std::function<void(int)>& body) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  auto worker = [&](int slot) {
    try {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    } catch (...) {
      errors[static_cast<std::size_t>(slot)] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void fold(CheckAccumulator& acc, const std::optional<std::string>& violation) {
  acc.fold(violation.value_or(std::string{}));
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace

std::string commandName(Command c) {
  switch (c) {
    case Command::Learn: return "learn";
    case Command::Transform: return "transform";
    case Command::Recover: return "recover";
    case Command::Selftest: return "selftest";
  }
  throw std::logic_error("unknown command");
}

Command parseCommand(std::string_view name) {
  if (name == "learn") return Command::Learn;
  if (name == "transform") return Command::Transform;
  if (name == "recover") return Command::Recover;
  if (name == "selftest") return Command::Selftest;
  throw std::invalid_argument("unknown command \"" + std::string(name) + "\"");
}

void ExperimentConfig::validate() const {
  if (worlds < 0 || worlds > 100000)
    throw std::invalid_argument("config: worlds outside [0, 100000]");
  if (k_max < 1 || k_max > 3)
    throw std::invalid_argument("config: k must be in [1, 3]");
  if (n_max < 2 || n_max > kMaxHorizon)
    throw std::invalid_argument("config: n-max must be in [2, " + std::to_string(kMaxHorizon) + "]");
  if (density.den == 0 || density.num > density.den)
    throw std::invalid_argument("config: density must be a rational in [0, 1]");
  if (formulas < 0 || formulas > 100000)
    throw std::invalid_argument("config: formulas outside [0, 100000]");
  if (vars < 1 || vars > 8)
    throw std::invalid_argument("config: vars must be in [1, 8]");
  if (m_allowed.empty())
    throw std::invalid_argument("config: at least one field degree must be allowed");
  for (int m : m_allowed)
    if (m != 2 && m != 6 && m != 18)
      throw std::invalid_argument("config: field degree " + std::to_string(m) + " is not 2 * 3^l within desk scale");
  if (jobs < 1 || jobs > 256)
    throw std::invalid_argument("config: jobs must be in [1, 256]");
}

std::map<std::string, std::string> ExperimentConfig::echo() const {
  std::map<std::string, std::string> out;
  out["command"] = commandName(command);
  out["seed"] = std::to_string(seed);
  out["worlds"] = std::to_string(worlds);
  out["k_max"] = std::to_string(k_max);
  out["n_max"] = std::to_string(n_max);
  out["density"] = density.str();
  out["formulas"] = std::to_string(formulas);
  out["vars"] = std::to_string(vars);
  std::string ms;
  for (int m : m_allowed) ms += (ms.empty() ? "" : ",") + std::to_string(m);
  out["m_allowed"] = ms;
  out["include_unsat"] = include_unsat ? "true" : "false";
  if (!scenario_files.empty()) {
    std::string files;
    for (const auto& f : scenario_files) files += (files.empty() ? "" : ";") + f;
    out["scenario_files"] = files;
  }
  return out;
}

WorldParams learnWorldParams(const ExperimentConfig& cfg, int index) {
  const std::uint64_t h = detail::mix({cfg.seed, kSaltWorld, static_cast<std::uint64_t>(index)});
  WorldParams params;
  params.seed = detail::mix({cfg.seed, kSaltWorldSeed, static_cast<std::uint64_t>(index)});
  params.k = 1 + index % cfg.k_max;
  params.n_max = 2 + (index / cfg.k_max) % (cfg.n_max - 1);
  params.census = Poly({2 + detail::draw(detail::mix({h, 1}), 5)});       // constant 2..6
  params.bound = Poly({1 + detail::draw(detail::mix({h, 2}), 2), 1});     // n+1 or n+2
  params.density = cfg.density;
  return params;
}

namespace {

// One world's worth of learner runs with every claim check folded in.
RunRecord learnWorldRecord(const SparseWorld& world, const std::string& id) {
  const auto start = Clock::now();
  RunRecord rec;
  rec.id = id;

  CheckAccumulator a1i("A1.i cardinality"), a1ii("A1.ii word-length"), a1iii("A1.iii lhs"),
      a1iv("A1.iv antichain"), a2("A2 packing"), a3w("A3 weight"), a3t("A3 termination"),
      a_lhs("A.lhs"), a_sat("A.satisfied"), a_cov("A.coverage"), b1("B1 passes"), b2("B2 forecast");
  std::uint64_t passes = 0;
  std::uint64_t packings = 0;
  std::string error;

  const int n = world.nMax();
  const TargetLanguage target(world);

  std::uint64_t members = 0;
  std::vector<Word> lhs_pool;
  for (std::uint64_t r = 0; r < Word::countUpToLength(n); ++r) {
    const Word x = Word::fromRank(r);
    if (target.contains(x)) ++members;
    const std::vector<Word> vs = lhsWords(world.reduction(x));
    lhs_pool.insert(lhs_pool.end(), vs.begin(), vs.end());
  }
  std::sort(lhs_pool.begin(), lhs_pool.end());
  lhs_pool.erase(std::unique(lhs_pool.begin(), lhs_pool.end()), lhs_pool.end());

  auto foldA1 = [&](const LearnState& st) {
    fold(a1i, violatesA1Cardinality(st, world));
    fold(a1ii, violatesA1WordLength(st, world));
    fold(a1iii, violatesA1Lhs(st, world));
    fold(a1iv, violatesA1Antichain(st, world));
  };

  try {
    for (const Word& z : lhs_pool) {
      LearnState last;
      LearnOptions opts;
      opts.on_pass = [&](const LearnState& st) {
        foldA1(st);
        last = st;
      };
      opts.on_pack = [&](const PackingChoice& choice, const LearnState& st) {
        fold(a2, violatesPackingChoice(choice, st.z, world.sparseSet()));
        ++packings;
      };
      const AntiHornFormula out = learnSat(world, target, n, z, opts);
      passes += last.pass_count;
      fold(a3w, violatesWeightTrace(last, world));
      fold(a3t, violatesPassBound(last, world));
      fold(a_lhs, violatesOutputLhs(out, z));
      fold(a_sat, violatesOutputSatisfied(out, world));
      fold(a_cov, violatesOutputCoverage(out, target, n));
    }

    LearnAllOptions lopts;
    lopts.on_pass = [&](const LearnAllPass& pass) { fold(b1, violatesB1Pass(pass, world)); };
    lopts.inner.on_pass = foldA1;  // Claim A1 holds inside the list learner too
    lopts.inner.on_pack = [&](const PackingChoice& choice, const LearnState& st) {
      fold(a2, violatesPackingChoice(choice, st.z, world.sparseSet()));
      ++packings;
    };
    const FormulaList list = learnAll(world, target, n, lopts);
    fold(b2, violatesB2(list, target));
    rec.counters["list_size"] = list.formulas.size();
  } catch (const std::exception& e) {
    error = e.what();
  }

  for (const CheckAccumulator* acc :
       {&a1i, &a1ii, &a1iii, &a1iv, &a2, &a3w, &a3t, &a_lhs, &a_sat, &a_cov, &b1, &b2})
    rec.checks.push_back(acc->result());
  if (!error.empty()) rec.checks.push_back({"exception", false, error});

  rec.counters["k"] = static_cast<std::uint64_t>(world.k());
  rec.counters["n_horizon"] = static_cast<std::uint64_t>(n);
  rec.counters["sparse_size"] = world.sparseSet().size();
  rec.counters["members"] = members;
  rec.counters["targets"] = lhs_pool.size();
  rec.counters["passes"] = passes;
  rec.counters["packings"] = packings;
  rec.wall_ms = msSince(start);
  return rec;
}

}  // namespace

RunReport runLearn(const ExperimentConfig& cfg) {
  cfg.validate();
  RunReport report;
  report.command = "learn";
  report.seed = cfg.seed;
  report.config = cfg.echo();

  if (!cfg.scenario_files.empty()) {
    // Explicit scenario worlds: load() revalidates every invariant, so a
    // corrupted file is rejected here with its diagnostic.
    std::vector<SparseWorld> worlds;
    worlds.reserve(cfg.scenario_files.size());
    for (const std::string& path : cfg.scenario_files) worlds.push_back(SparseWorld::load(readFile(path)));
    report.records.resize(worlds.size());
    forEachIndex(static_cast<int>(worlds.size()), cfg.jobs, [&](int i) {
      report.records[static_cast<std::size_t>(i)] =
          learnWorldRecord(worlds[static_cast<std::size_t>(i)], cfg.scenario_files[static_cast<std::size_t>(i)]);
    });
    return report;
  }

  if (!cfg.dump_scenarios.empty()) std::filesystem::create_directories(cfg.dump_scenarios);
  report.records.resize(static_cast<std::size_t>(cfg.worlds));
  forEachIndex(cfg.worlds, cfg.jobs, [&](int i) {
    const SparseWorld world = SparseWorld::generate(learnWorldParams(cfg, i));
    if (!cfg.dump_scenarios.empty())
      writeFile(cfg.dump_scenarios + "/" + indexId("world", i) + ".json", world.save());
    report.records[static_cast<std::size_t>(i)] = learnWorldRecord(world, indexId("world", i));
  });
  return report;
}

namespace {

struct TransformInstance {
  int k = 1;
  WordSet s;
  BoundedCnf cnf;
  BoundedDnf dnf;
};

Word drawShortWord(std::uint64_t h) {
  const int len = 1 + static_cast<int>(detail::draw(detail::mix({h, 1}), 6));
  return Word::fromBits(detail::draw(detail::mix({h, 2}), std::uint64_t{1} << len), len);
}

TransformInstance makeTransformInstance(std::uint64_t seed, int index) {
  const std::uint64_t h = detail::mix({seed, kSaltTransform, static_cast<std::uint64_t>(index)});
  TransformInstance inst;
  inst.k = 1 + static_cast<int>(detail::draw(detail::mix({h, 1}), 3));

  std::vector<Word> pool;
  for (std::uint64_t probe = 0; pool.size() < 6; ++probe) {
    const Word w = drawShortWord(detail::mix({h, 2, probe}));
    if (std::find(pool.begin(), pool.end(), w) == pool.end()) pool.push_back(w);
  }
  std::vector<Word> in_s;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (detail::mix({h, 3, i}) & 1u) in_s.push_back(pool[i]);
  inst.s = WordSet(std::move(in_s));

  auto makeGroups = [&](std::uint64_t salt) {
    std::vector<LiteralGroup> groups;
    const int count = 1 + static_cast<int>(detail::draw(detail::mix({h, salt, 0}), 4));
    for (int g = 0; g < count; ++g) {
      const int lits = 1 + static_cast<int>(
                               detail::draw(detail::mix({h, salt, static_cast<std::uint64_t>(g), 1}),
                                            static_cast<std::uint64_t>(inst.k)));
      std::vector<Word> negs, poss;
      for (int l = 0; l < lits; ++l) {
        const std::uint64_t hl = detail::mix({h, salt, static_cast<std::uint64_t>(g), 2, static_cast<std::uint64_t>(l)});
        const Word& w = pool[detail::draw(hl, pool.size())];
        (detail::mix({hl, 3}) & 1u) ? negs.push_back(w) : poss.push_back(w);
      }
      groups.emplace_back(std::move(negs), std::move(poss));
    }
    return groups;
  };
  inst.cnf = BoundedCnf(inst.k, makeGroups(4));
  inst.dnf = BoundedDnf(inst.k, makeGroups(5));
  return inst;
}

}  // namespace

RunReport runTransform(const ExperimentConfig& cfg) {
  cfg.validate();
  RunReport report;
  report.command = "transform";
  report.seed = cfg.seed;
  report.config = cfg.echo();

  constexpr int kBatch = 100;
  const int batches = (cfg.formulas + kBatch - 1) / kBatch;
  report.records.resize(static_cast<std::size_t>(batches));
  forEachIndex(batches, cfg.jobs, [&](int b) {
    const auto start = Clock::now();
    RunRecord rec;
    rec.id = indexId("batch", b, 2);
    CheckAccumulator preserve("preservation"), complement("complementarity"), compose("composition");
    const int lo = b * kBatch;
    const int hi = std::min(cfg.formulas, lo + kBatch);
    for (int j = lo; j < hi; ++j) {
      const TransformInstance inst = makeTransformInstance(cfg.seed, j);
      const WordSet lifted = liftSparseSet(inst.s, inst.k, 6);
      const bool direct = satisfied(inst.cnf, inst.s);
      const bool transformed = satisfied(transformCnf(inst.cnf), lifted);
      preserve.fold(direct == transformed
                        ? std::string{}
                        : "cnf " + std::to_string(j) + ": direct " + std::to_string(direct) +
                              ", transformed " + std::to_string(transformed));
      const bool dnf_value = satisfied(inst.dnf, inst.s);
      const BoundedCnf negated = negateDnf(inst.dnf);
      complement.fold(satisfied(negated, inst.s) == !dnf_value
                          ? std::string{}
                          : "dnf " + std::to_string(j) + ": negation not complementary");
      compose.fold(satisfied(transformCnf(negated), lifted) == !dnf_value
                       ? std::string{}
                       : "dnf " + std::to_string(j) + ": composed reduction disagrees");
    }
    rec.checks = {preserve.result(), complement.result(), compose.result()};
    rec.counters["instances"] = static_cast<std::uint64_t>(hi - lo);
    rec.wall_ms = msSince(start);
    report.records[static_cast<std::size_t>(b)] = std::move(rec);
  });
  return report;
}

namespace {

RunRecord fieldAxiomsRecord(std::uint64_t seed) {
  const auto start = Clock::now();
  RunRecord rec;
  rec.id = "field-axioms";
  CheckAccumulator pairs4("gf4 pairs"), triples4("gf4 triples"), triples64("gf64 triples"),
      pow64("gf64 pow-order");

  const FieldCtx f4 = FieldCtx::build(2);
  for (std::uint64_t i = 0; i < 4; ++i)
    for (std::uint64_t j = 0; j < 4; ++j) {
      const FieldElement a = f4.element(i), b = f4.element(j);
      std::string bad;
      if (f4.add(a, b) != f4.add(b, a)) bad = "a+b != b+a";
      if (f4.mul(a, b) != f4.mul(b, a)) bad = "a*b != b*a";
      if (f4.add(a, f4.zero()) != a) bad = "a+0 != a";
      if (f4.mul(a, f4.one()) != a) bad = "a*1 != a";
      if (f4.mul(a, f4.zero()) != f4.zero()) bad = "a*0 != 0";
      if (f4.add(a, a) != f4.zero()) bad = "a+a != 0";
      if (a.bits != 0 && f4.mul(a, f4.inv(a)) != f4.one()) bad = "a * inv(a) != 1";
      if (f4.pow(f4.add(a, b), 2) != f4.add(f4.pow(a, 2), f4.pow(b, 2))) bad = "(a+b)^2 != a^2+b^2";
      pairs4.fold(bad.empty() ? bad : bad + " at a=" + std::to_string(i) + " b=" + std::to_string(j));
    }
  for (std::uint64_t i = 0; i < 4; ++i)
    for (std::uint64_t j = 0; j < 4; ++j)
      for (std::uint64_t l = 0; l < 4; ++l) {
        const FieldElement a = f4.element(i), b = f4.element(j), c = f4.element(l);
        std::string bad;
        if (f4.add(f4.add(a, b), c) != f4.add(a, f4.add(b, c))) bad = "(a+b)+c != a+(b+c)";
        if (f4.mul(f4.mul(a, b), c) != f4.mul(a, f4.mul(b, c))) bad = "(a*b)*c != a*(b*c)";
        if (f4.mul(a, f4.add(b, c)) != f4.add(f4.mul(a, b), f4.mul(a, c)))
          bad = "a*(b+c) != a*b + a*c";
        triples4.fold(bad);
      }

  const FieldCtx f64 = FieldCtx::build(6);
  for (std::uint64_t t = 0; t < 10000; ++t) {
    const FieldElement a = f64.element(detail::draw(detail::mix({seed, kSaltField, t, 0}), 64));
    const FieldElement b = f64.element(detail::draw(detail::mix({seed, kSaltField, t, 1}), 64));
    const FieldElement c = f64.element(detail::draw(detail::mix({seed, kSaltField, t, 2}), 64));
    std::string bad;
    if (f64.add(a, b) != f64.add(b, a)) bad = "a+b != b+a";
    if (f64.mul(a, b) != f64.mul(b, a)) bad = "a*b != b*a";
    if (f64.add(f64.add(a, b), c) != f64.add(a, f64.add(b, c))) bad = "(a+b)+c != a+(b+c)";
    if (f64.mul(f64.mul(a, b), c) != f64.mul(a, f64.mul(b, c))) bad = "(a*b)*c != a*(b*c)";
    if (f64.mul(a, f64.add(b, c)) != f64.add(f64.mul(a, b), f64.mul(a, c)))
      bad = "a*(b+c) != a*b + a*c";
    if (f64.pow(f64.add(a, b), 2) != f64.add(f64.pow(a, 2), f64.pow(b, 2)))
      bad = "(a+b)^2 != a^2+b^2";
    if (a.bits != 0 && f64.mul(a, f64.inv(a)) != f64.one()) bad = "a * inv(a) != 1";
    triples64.fold(bad.empty() ? bad
                               : bad + " at a=" + std::to_string(a.bits) + " b=" +
                                     std::to_string(b.bits) + " c=" + std::to_string(c.bits));
  }
  for (std::uint64_t i = 1; i < 64; ++i)
    pow64.fold(f64.pow(f64.element(i), 63) == f64.one()
                   ? std::string{}
                   : "a^63 != 1 at a=" + std::to_string(i));

  rec.checks = {pairs4.result(), triples4.result(), triples64.result(), pow64.result()};
  rec.counters["gf4_pairs"] = 16;
  rec.counters["gf4_triples"] = 64;
  rec.counters["gf64_triples"] = 10000;
  rec.counters["gf64_nonzero"] = 63;
  rec.wall_ms = msSince(start);
  return rec;
}

WordSet makeRecoverSparseSet(std::uint64_t h) {
  std::vector<Word> words;
  for (std::uint64_t probe = 0; words.size() < 3; ++probe) {
    const int len = 2 + static_cast<int>(detail::draw(detail::mix({h, probe, 1}), 7));
    const Word w = Word::fromBits(detail::draw(detail::mix({h, probe, 2}), std::uint64_t{1} << len), len);
    if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
  }
  return WordSet(std::move(words));
}

std::string bitsString(std::uint64_t mask, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += ((mask >> i) & 1u) ? '1' : '0';
  return out;
}

RunRecord recoverFormulaRecord(const ExperimentConfig& cfg, int j) {
  const auto start = Clock::now();
  const std::uint64_t h = detail::mix({cfg.seed, kSaltRecover, static_cast<std::uint64_t>(j)});
  const int n = 1 + static_cast<int>(detail::draw(detail::mix({h, 1}), static_cast<std::uint64_t>(cfg.vars)));
  const bool unsat = cfg.include_unsat && j % 5 == 4;
  const CnfFormula phi = unsat ? makeUnsatisfiableCnf(detail::mix({h, 2}), n)
                               : makeUniquelySatisfiableCnf(detail::mix({h, 2}), n);

  const Poly2 census = Poly2::constant(4);
  const Poly2 length = Poly2::constant(60);
  const int m_star = chooseM(static_cast<std::uint64_t>(n), phi.sizeMeasure(), census);
  if (std::find(cfg.m_allowed.begin(), cfg.m_allowed.end(), m_star) == cfg.m_allowed.end())
    throw std::invalid_argument("recover: formula " + std::to_string(j) + " needs field degree m = " +
                                std::to_string(m_star) + " by the bound 2^m / p(n',m) >= n, which the "
                                "configured degree set does not allow");

  RunRecord rec;
  rec.id = indexId("formula", j);
  rec.counters["n"] = static_cast<std::uint64_t>(n);
  rec.counters["m"] = static_cast<std::uint64_t>(m_star);
  rec.counters["m_" + std::to_string(m_star)] = 1;

  const WordSet s = makeRecoverSparseSet(detail::mix({h, 3}));
  RecoveryInstance inst{phi, phi.sizeMeasure(),
                        harnessReduction(detail::mix({h, 4}), s, phi, length, bruteForceMembership(phi)),
                        s, census, length};
  const std::vector<std::uint64_t> oracle = allSatisfyingAssignments(phi);

  if (unsat) {
    CheckAccumulator contract("unsat contract");
    if (!oracle.empty())
      contract.fold("generator produced a satisfiable formula");
    else {
      try {
        recoverAssignment(inst);
        contract.fold("recovery returned an assignment for an unsatisfiable formula");
      } catch (const NoAssignmentFound&) {
        contract.foldOk();
      }
    }
    rec.checks = {contract.result()};
    rec.counters["unsat"] = 1;
    rec.wall_ms = msSince(start);
    return rec;
  }

  CheckAccumulator unique("uniqueness"), agree("agreement"), verified("verified");
  unique.fold(oracle.size() == 1
                  ? std::string{}
                  : "oracle finds " + std::to_string(oracle.size()) + " satisfying assignments");
  try {
    const std::vector<std::uint8_t> bits = recoverAssignment(inst);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) mask |= std::uint64_t{1} << i;
    agree.fold(oracle.size() == 1 && mask != oracle[0]
                   ? "recovered " + bitsString(mask, n) + ", oracle has " + bitsString(oracle[0], n)
                   : std::string{});
    verified.fold(phi.eval(mask) ? std::string{} : "returned assignment does not satisfy phi");
  } catch (const RecoveryError& e) {
    agree.fold(std::string("recovery failed: ") + e.what());
  }
  rec.checks = {unique.result(), agree.result(), verified.result()};
  rec.wall_ms = msSince(start);
  return rec;
}

}  // namespace

RunReport runRecover(const ExperimentConfig& cfg) {
  cfg.validate();
  RunReport report;
  report.command = "recover";
  report.seed = cfg.seed;
  report.config = cfg.echo();

  report.records.resize(static_cast<std::size_t>(cfg.formulas) + 1);
  report.records[0] = fieldAxiomsRecord(cfg.seed);
  forEachIndex(cfg.formulas, cfg.jobs, [&](int j) {
    report.records[static_cast<std::size_t>(j) + 1] = recoverFormulaRecord(cfg, j);
  });
  return report;
}

namespace {

// Folds the matching checks of many records into one criterion record,
// prefixing failure details with the source record id.
void foldCriterion(RunRecord& out, const std::vector<RunRecord>& records,
                   const std::function<bool(const RunRecord&, const std::string&)>& take) {
  std::vector<std::pair<std::string, CheckAccumulator>> accs;
  for (const RunRecord& r : records)
    for (const CheckResult& c : r.checks) {
      if (!take(r, c.name)) continue;
      auto it = std::find_if(accs.begin(), accs.end(),
                             [&](const auto& entry) { return entry.first == c.name; });
      if (it == accs.end()) {
        accs.emplace_back(c.name, CheckAccumulator(c.name));
        it = std::prev(accs.end());
      }
      it->second.fold(c.passed ? std::string{} : r.id + ": " + c.detail);
    }
  for (const auto& [name, acc] : accs) out.checks.push_back(acc.result());
}

std::uint64_t sumCounter(const std::vector<RunRecord>& records, const std::string& key) {
  std::uint64_t total = 0;
  for (const RunRecord& r : records) {
    const auto it = r.counters.find(key);
    if (it != r.counters.end()) total += it->second;
  }
  return total;
}

bool sameBytes(const RunReport& a, const RunReport& b) {
  return a.json() == b.json() && a.summaryText() == b.summaryText();
}

}  // namespace

RunReport runSelftest(const ExperimentConfig& cfg) {
  cfg.validate();

  // The acceptance-scale configurations; only seed and jobs flow through.
  ExperimentConfig lc = cfg;
  lc.command = Command::Learn;
  lc.worlds = 200;
  lc.k_max = 3;
  lc.n_max = 8;
  lc.density = Rational{3, 4};
  lc.scenario_files.clear();
  lc.dump_scenarios.clear();
  lc.out_dir.clear();
  ExperimentConfig tc = lc;
  tc.command = Command::Transform;
  tc.formulas = 500;
  ExperimentConfig rc = lc;
  rc.command = Command::Recover;
  rc.formulas = 100;
  rc.vars = 6;
  rc.m_allowed = {2, 6};
  rc.include_unsat = false;

  auto t = Clock::now();
  const RunReport learn = runLearn(lc);
  const double learn_ms = msSince(t);
  t = Clock::now();
  const RunReport transform = runTransform(tc);
  const double transform_ms = msSince(t);
  t = Clock::now();
  const RunReport recover = runRecover(rc);
  const double recover_ms = msSince(t);

  t = Clock::now();
  const bool learn_repeat = sameBytes(learn, runLearn(lc));
  const bool transform_repeat = sameBytes(transform, runTransform(tc));
  const bool recover_repeat = sameBytes(recover, runRecover(rc));
  const double repeat_ms = msSince(t);

  const auto isWeight = [](const std::string& name) { return name == "A3 weight"; };
  const auto isClaimB = [](const std::string& name) {
    return name.rfind("B1", 0) == 0 || name.rfind("B2", 0) == 0;
  };

  RunRecord c1;
  c1.id = "criterion-1";
  foldCriterion(c1, learn.records, [&](const RunRecord&, const std::string& name) {
    return !isWeight(name) && !isClaimB(name);
  });
  c1.counters["worlds"] = learn.records.size();
  c1.counters["targets"] = sumCounter(learn.records, "targets");
  c1.counters["passes"] = sumCounter(learn.records, "passes");
  c1.counters["packings"] = sumCounter(learn.records, "packings");
  c1.wall_ms = learn_ms;

  RunRecord c2;
  c2.id = "criterion-2";
  foldCriterion(c2, learn.records,
                [&](const RunRecord&, const std::string& name) { return isWeight(name); });
  c2.counters["worlds"] = learn.records.size();

  RunRecord c3;
  c3.id = "criterion-3";
  foldCriterion(c3, learn.records,
                [&](const RunRecord&, const std::string& name) { return isClaimB(name); });
  c3.counters["worlds"] = learn.records.size();

  RunRecord c4;
  c4.id = "criterion-4";
  foldCriterion(c4, transform.records, [](const RunRecord&, const std::string&) { return true; });
  c4.counters["instances"] = sumCounter(transform.records, "instances");
  c4.wall_ms = transform_ms;

  RunRecord c5;
  c5.id = "criterion-5";
  foldCriterion(c5, recover.records,
                [](const RunRecord& r, const std::string&) { return r.id == "field-axioms"; });
  if (!recover.records.empty()) {
    c5.counters = recover.records[0].counters;
    c5.wall_ms = recover.records[0].wall_ms;
  }

  RunRecord c6;
  c6.id = "criterion-6";
  foldCriterion(c6, recover.records,
                [](const RunRecord& r, const std::string&) { return r.id != "field-axioms"; });
  c6.counters["formulas"] = recover.records.empty() ? 0 : recover.records.size() - 1;
  c6.counters["m_2"] = sumCounter(recover.records, "m_2");
  c6.counters["m_6"] = sumCounter(recover.records, "m_6");
  c6.wall_ms = recover_ms;

  RunRecord c7;
  c7.id = "criterion-7";
  c7.checks.push_back({"learn repeat", learn_repeat,
                       learn_repeat ? "byte-identical" : "repeat run produced different bytes"});
  c7.checks.push_back({"transform repeat", transform_repeat,
                       transform_repeat ? "byte-identical" : "repeat run produced different bytes"});
  c7.checks.push_back({"recover repeat", recover_repeat,
                       recover_repeat ? "byte-identical" : "repeat run produced different bytes"});
  c7.wall_ms = repeat_ms;

  RunReport report;
  report.command = "selftest";
  report.seed = cfg.seed;
  report.config = cfg.echo();
  report.records = {std::move(c1), std::move(c2), std::move(c3), std::move(c4),
                    std::move(c5), std::move(c6), std::move(c7)};
  return report;
}

RunReport run(const ExperimentConfig& cfg) {
  RunReport report;
  switch (cfg.command) {
    case Command::Learn: report = runLearn(cfg); break;
    case Command::Transform: report = runTransform(cfg); break;
    case Command::Recover: report = runRecover(cfg); break;
    case Command::Selftest: report = runSelftest(cfg); break;
  }
  if (!cfg.out_dir.empty()) emitReport(report, cfg.out_dir);
  return report;
}

CnfFormula makeUniquelySatisfiableCnf(std::uint64_t seed, int n) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("cnf generator: variable count outside [1, 16]");
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  const std::uint64_t t = detail::mix({seed, 1}) & all;  // the planted assignment

  std::vector<std::vector<int>> clauses;
  // A little texture: random clauses the planted assignment satisfies.
  const int extra = 1 + static_cast<int>(detail::draw(detail::mix({seed, 2}), static_cast<std::uint64_t>(n)));
  for (int c = 0; c < extra; ++c) {
    const int width = 1 + static_cast<int>(
                              detail::draw(detail::mix({seed, 3, static_cast<std::uint64_t>(c)}),
                                           std::min<std::uint64_t>(3, static_cast<std::uint64_t>(n))));
    std::vector<int> vars;
    for (std::uint64_t probe = 0; static_cast<int>(vars.size()) < width; ++probe) {
      const int v = 1 + static_cast<int>(
                            detail::draw(detail::mix({seed, 4, static_cast<std::uint64_t>(c), probe}),
                                         static_cast<std::uint64_t>(n)));
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::vector<int> clause;
    bool holds = false;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const bool positive =
          detail::mix({seed, 5, static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(i)}) & 1u;
      clause.push_back(positive ? vars[i] : -vars[i]);
      const bool value = (t >> (vars[i] - 1)) & 1u;
      holds = holds || (value == positive);
    }
    if (!holds) clause[0] = -clause[0];  // flip one literal toward the planted assignment
    clauses.push_back(std::move(clause));
  }

  // Kill every other satisfying assignment: the clause of all differing
  // variables, polarized toward t, is false exactly on assignments agreeing
  // with the intruder on those variables.
  while (true) {
    const CnfFormula phi(n, clauses);
    std::uint64_t intruder = 0;
    bool found = false;
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
      if (mask == t || !phi.eval(mask)) continue;
      intruder = mask;
      found = true;
      break;
    }
    if (!found) return phi;
    std::vector<int> clause;
    for (int i = 0; i < n; ++i) {
      if (((intruder >> i) & 1u) == ((t >> i) & 1u)) continue;
      clause.push_back(((t >> i) & 1u) ? i + 1 : -(i + 1));
    }
    clauses.push_back(std::move(clause));
  }
}

CnfFormula makeUnsatisfiableCnf(std::uint64_t seed, int n) {
  const CnfFormula unique = makeUniquelySatisfiableCnf(seed, n);
  const std::vector<std::uint64_t> sats = allSatisfyingAssignments(unique);
  if (sats.size() != 1) throw std::logic_error("cnf generator: planted formula is not uniquely satisfiable");
  std::vector<std::vector<int>> clauses = unique.clauses();
  std::vector<int> killer;
  for (int i = 0; i < n; ++i)
    killer.push_back(((sats[0] >> i) & 1u) ? -(i + 1) : i + 1);
  clauses.push_back(std::move(killer));
  return CnfFormula(n, clauses);
}

}  // namespace antihorn
