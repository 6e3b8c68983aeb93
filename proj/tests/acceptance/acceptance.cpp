// Acceptance suite: one PASS/FAIL line per criterion. Every suite builds a
// JSON report; criterion 9 re-runs suites 1-8 with a different worker
// count and compares the serialized reports byte for byte.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "ordkit/cli/commands.hpp"
#include "ordkit/cli/report.hpp"
#include "ordkit/events.hpp"
#include "ordkit/group.hpp"
#include "ordkit/monotone.hpp"
#include "ordkit/orderability.hpp"
#include "ordkit/parallel.hpp"
#include "ordkit/representation.hpp"
#include "ordkit/verification.hpp"

using namespace ordkit;
using ordkit::cli::Json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  Json report = Json::object();
};

CarrierPtr letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return make_carrier(labels);
}

// 1 ------------------------------------------------------------------------

Outcome additivity_suite() {
  Outcome o;
  std::uint64_t relations = 0, cx = 0;
  for (const auto& moduli : std::vector<std::vector<std::size_t>>{{3}, {4}, {2, 2}}) {
    const auto g = FiniteAbelianGroup::build(moduli);
    const auto reps = verify_additivity_theorems(g, Budget::exhaustive_budget());
    Json arr = Json::array();
    for (const auto& r : reps) {
      cx += r.counterexample_count;
      for (const auto& c : r.counterexamples)
        if (!recheck_additivity_counterexample(g, r.claim, c)) o.pass = false;
      arr.push_back(cli::verification_json(r));
    }
    relations += reps.front().checked;
    std::string name;
    for (auto m : moduli) name += (name.empty() ? "Z" : " x Z") + std::to_string(m);
    o.report[name] = arr;
  }
  o.pass = o.pass && cx == 0 && relations == 512 + 65536 + 65536;
  o.detail = std::to_string(relations) + " relations x 4 claims, " + std::to_string(cx) + " counterexamples";
  return o;
}

// 2 ------------------------------------------------------------------------

// Uniform complete relations on 8 events almost never satisfy the additivity
// hypothesis, so the sampled run alone says little. Measure relations with a
// few pairs re-drawn do satisfy it now and then.
struct PerturbedRun {
  std::uint64_t samples = 0, antecedent = 0, perturbed_antecedent = 0, violations = 0;
};

PerturbedRun perturbed_measures(std::uint64_t samples, std::uint64_t seed) {
  const EventAlgebra alg(3);
  std::mt19937_64 rng(seed);
  PerturbedRun run;
  for (std::uint64_t t = 0; t < samples; ++t) {
    std::vector<Rational> w(3);
    for (auto& x : w) x = Rational(static_cast<long>(rng() % 4));
    if (w[0] + w[1] + w[2] == 0) w[0] = 1;
    const auto base = BitMatrix::from_relation(measure_relation(alg, w));
    BitMatrix m = base;
    const std::size_t flips = rng() % 3;
    for (std::size_t f = 0; f < flips; ++f) {
      const std::size_t i = rng() % 8, j = rng() % 8;
      if (i == j) continue;
      const auto state = rng() % 3;
      m.rows[i] &= ~(std::uint64_t{1} << j);
      m.rows[j] &= ~(std::uint64_t{1} << i);
      if (state != 1) m.rows[i] |= std::uint64_t{1} << j;
      if (state != 0) m.rows[j] |= std::uint64_t{1} << i;
    }
    ++run.samples;
    if (completeness_failure(m) || !villegas_failure(m, alg).holds) continue;
    ++run.antecedent;
    if (m.rows != base.rows) ++run.perturbed_antecedent;
    naive::Rel r(8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r.m[i][j] = m.at(i, j);
    if (naive::transitive_failure(r)) ++run.violations;
  }
  return run;
}

Outcome degroot_suite() {
  Outcome o;
  const auto ex = verify_degroot(EventAlgebra(2), Budget::exhaustive_budget());
  const auto sm = verify_degroot(EventAlgebra(3), Budget::sampled(1000000, 20240601, SampleSpace::complete_relations));
  o.report["exhaustive_2_atoms"] = cli::verification_json(ex);
  o.report["sampled_3_atoms"] = cli::verification_json(sm);
  const auto pm = perturbed_measures(200000, 99);
  o.report["perturbed_measures_3_atoms"] = {{"samples", pm.samples},
                                            {"antecedent_held", pm.antecedent},
                                            {"antecedent_held_after_perturbation", pm.perturbed_antecedent},
                                            {"counterexamples", pm.violations}};
  o.pass = ex.checked == 65536 && sm.checked == 1000000 && ex.passed() && sm.passed() && pm.violations == 0;
  o.detail = "2 atoms: " + std::to_string(ex.checked) + " relations, " + std::to_string(ex.antecedent_held) +
             " complete and additive, " + std::to_string(ex.counterexample_count) + " counterexamples; 3 atoms: " +
             std::to_string(sm.checked) + " samples, " + std::to_string(sm.antecedent_held) + " complete and additive, " +
             std::to_string(sm.counterexample_count) + " counterexamples; perturbed measures: " +
             std::to_string(pm.samples) + " samples, " + std::to_string(pm.antecedent) + " complete and additive (" +
             std::to_string(pm.perturbed_antecedent) + " perturbed), " + std::to_string(pm.violations) +
             " counterexamples";
  return o;
}

// 3 ------------------------------------------------------------------------

Outcome forward_criterion_suite() {
  Outcome o;
  std::size_t spaces = 0, connected = 0, ordered_connected = 0, violations = 0, ordered = 0, gaps = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    Json row = Json::object();
    std::size_t count = 0;
    for (const auto& top : all_topologies(letters(n))) {
      ++spaces;
      ++count;
      const auto order = find_order(top);
      const auto crit = eilenberg_criterion(top);
      if (order) {
        ++ordered;
        if (!order->certifies(top)) ++violations;
        if (!crit.satisfied) ++violations;
      }
      if (is_connected(top)) {
        ++connected;
        if (order) {
          ++ordered_connected;
          if (!crit.satisfied) ++violations;
        }
        if (crit.satisfied && !order) ++gaps;
      }
    }
    row["topologies"] = count;
    o.report["size_" + std::to_string(n)] = row;
  }
  o.report["connected"] = connected;
  o.report["connected_with_order"] = ordered_connected;
  o.report["with_order"] = ordered;
  o.report["criterion_witness_gaps"] = gaps;
  o.report["violations"] = violations;
  o.pass = violations == 0 && spaces == 4 + 29 + 355;
  o.detail = std::to_string(spaces) + " topologies, " + std::to_string(violations) + " violations; " +
             std::to_string(connected) + " connected, " + std::to_string(ordered_connected) +
             " of them ordered (implication vacuous), " + std::to_string(gaps) +
             " connected spaces satisfy the criterion without an order";
  return o;
}

// 4 ------------------------------------------------------------------------

bool quotient_orderable(const FiniteTopology& top, const OrderWitness& w) {
  const auto iq = induced_quotient_relation(w.relation);
  const auto q = quotient(top, iq.classes);
  return iq.classes.block_count() >= 2 && find_order(q.space).has_value();
}

Outcome weak_order_suite() {
  Outcome o;
  std::size_t spaces = 0, disagreements = 0, successes = 0, quotient_failures = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t yes = 0, count = 0;
    for (const auto& top : all_topologies(letters(n))) {
      ++spaces;
      ++count;
      const auto fw = find_weak_order(top);
      const auto bf = brute_force_weak_order(top);
      if (fw.has_value() != bf.has_value()) ++disagreements;
      if (fw) {
        ++yes;
        ++successes;
        if (!fw->certifies(top) || !quotient_orderable(top, *fw)) ++quotient_failures;
      }
      if (bf && (!bf->certifies(top) || !quotient_orderable(top, *bf))) ++quotient_failures;
    }
    o.report["size_" + std::to_string(n)] = {{"topologies", count}, {"weakly_orderable", yes}};
  }
  o.report["disagreements"] = disagreements;
  o.report["quotient_failures"] = quotient_failures;
  o.pass = disagreements == 0 && quotient_failures == 0;
  o.detail = std::to_string(spaces) + " topologies, " + std::to_string(successes) + " weakly orderable, " +
             std::to_string(disagreements) + " disagreements, " + std::to_string(quotient_failures) +
             " quotient failures";
  return o;
}

// 5 ------------------------------------------------------------------------

FiniteTopology random_topology(std::size_t n, std::mt19937_64& rng) {
  // Reflexive-transitive closure of a sparse random relation gives U(x).
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    r[i][i] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng() % 6 == 0) r[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  std::vector<ElementSet> nb(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r[i][j]) nb[i].set(j);
  return FiniteTopology::from_min_neighborhoods(letters(n), nb);
}

Outcome glue_lift_suite() {
  Outcome o;
  std::mt19937_64 rng(5150);
  std::size_t glue = 0, lift = 0, failures = 0;
  Json digests = Json::array();
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 6;
    if (t % 2 == 0) {
      // Glue: components of an orderable space are points.
      const auto top = FiniteTopology::discrete(letters(n));
      const auto comps = components(top);
      std::vector<OrderWitness> orders;
      for (std::size_t k = 0; k < comps.count(); ++k) orders.push_back(*find_order(subspace(top, comps.block(k))));
      std::vector<std::size_t> ranking(comps.count());
      for (std::size_t k = 0; k < ranking.size(); ++k) ranking[k] = k;
      std::shuffle(ranking.begin(), ranking.end(), rng);
      const auto glued = glue_component_orders(top, orders, ranking);
      const auto w = make_witness(glued, OrderKind::order, top);
      ++glue;
      if (!w.certifies(top)) ++failures;
      digests.push_back(glued.index());
    } else {
      // Lift: group the components into at least two clopen blocks.
      auto top = random_topology(n, rng);
      auto comps = components(top);
      for (int tries = 0; comps.count() < 2 && tries < 20; ++tries) {
        top = random_topology(n == 1 ? 2 : n, rng);
        comps = components(top);
      }
      if (comps.count() < 2) {
        top = FiniteTopology::discrete(letters(std::max<std::size_t>(n, 2)));
        comps = components(top);
      }
      const std::size_t k = 2 + rng() % (comps.count() - 1);
      std::vector<std::size_t> group(comps.count());
      for (std::size_t c = 0; c < group.size(); ++c) group[c] = c < k ? c : rng() % k;
      std::shuffle(group.begin(), group.end(), rng);
      // Renumber blocks by first appearance over the carrier.
      std::vector<std::size_t> raw(top.size()), rgs(top.size());
      for (std::size_t x = 0; x < top.size(); ++x) raw[x] = group[comps.partition.block_of(x)];
      std::vector<std::size_t> rename(k, k);
      std::size_t next = 0;
      for (std::size_t x = 0; x < top.size(); ++x) {
        if (rename[raw[x]] == k) rename[raw[x]] = next++;
        rgs[x] = rename[raw[x]];
      }
      const Partition p(rgs);
      const auto q = quotient(top, p);
      const auto order = find_order(q.space);
      ++lift;
      if (!order) {
        ++failures;
        continue;
      }
      const auto lifted = lift_quotient_relation(top, p, order->relation);
      const auto w = make_witness(lifted, OrderKind::weak_order, top, p);
      const auto props = check_properties(lifted);
      if (!w.certifies(top) || !props[Property::non_trivial].holds) ++failures;
      digests.push_back(lifted.index());
    }
  }
  o.report["glue"] = glue;
  o.report["lift"] = lift;
  o.report["failures"] = failures;
  o.report["relations"] = digests;
  o.pass = failures == 0 && glue + lift == 1000;
  o.detail = std::to_string(glue) + " glue and " + std::to_string(lift) + " lift instances, " +
             std::to_string(failures) + " certificate failures";
  return o;
}

// 6 ------------------------------------------------------------------------

Outcome neg_sup_inf_suite() {
  Outcome o;
  std::mt19937_64 rng(314159);
  std::size_t failures = 0;
  std::uint64_t fingerprint = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 1 + rng() % 4;
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 6);
    const IntegerBox box(BoxPoint(d, -r), BoxPoint(d, r));
    std::vector<BoxPoint> s(1 + rng() % 8, BoxPoint(d));
    for (auto& x : s)
      for (auto& v : x) v = static_cast<std::int64_t>(rng() % (2 * r + 1)) - r;
    // Both sides by hand.
    BoxPoint sup(d, -r), inf_neg(d, r);
    for (const auto& x : s)
      for (std::size_t i = 0; i < d; ++i) {
        sup[i] = std::max(sup[i], x[i]);
        inf_neg[i] = std::min(inf_neg[i], -x[i]);
      }
    bool ok = neg_sup_inf_lemma(box, s) && box.sup(s) == sup;
    for (std::size_t i = 0; i < d; ++i) ok = ok && inf_neg[i] == -sup[i];
    if (!ok) ++failures;
    for (auto v : sup) fingerprint = fingerprint * 31 + static_cast<std::uint64_t>(v + 100);
  }
  o.report["cases"] = 1000;
  o.report["failures"] = failures;
  o.report["fingerprint"] = fingerprint;
  o.pass = failures == 0;
  o.detail = "1000 subsets, d <= 4, " + std::to_string(failures) + " failures";
  return o;
}

// 7 ------------------------------------------------------------------------

PairVerdict dot_verdict(const std::vector<mpq_class>& p, const BoxPoint& x, const BoxPoint& y) {
  const mpq_class d = naive::dot(p, std::vector<long>(x.begin(), x.end())) -
                      naive::dot(p, std::vector<long>(y.begin(), y.end()));
  return d > 0 ? PairVerdict::succ : d < 0 ? PairVerdict::prec : PairVerdict::sim;
}

Outcome representation_suite() {
  Outcome o;
  std::mt19937_64 rng(8086);
  std::size_t solved = 0, failures = 0, rows_total = 0;
  Json weights = Json::array();
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng() % 4;
    std::vector<mpq_class> p(d);
    mpq_class total = 0;
    for (auto& x : p) total += (x = mpq_class(static_cast<long>(1 + rng() % 12)));
    for (auto& x : p) x /= total;
    std::vector<BoxPoint> pts;
    const std::size_t count = 2 + rng() % 19;
    while (pts.size() < count) {
      BoxPoint x(d);
      for (auto& v : x) v = static_cast<std::int64_t>(rng() % 9) - 4;
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
      if (d == 1 && pts.size() == 9) break;
    }
    std::vector<PointVerdict> rows;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) rows.push_back({pts[i], pts[j], dot_verdict(p, pts[i], pts[j])});
    rows_total += rows.size();
    const VerdictSet vs(d, rows);
    const auto res = solve_linear_representation(vs);
    bool ok = res.feasible() && res.witness->slack > 0 && verify_witness(vs, *res.witness);
    if (ok)
      for (const auto& r : rows) ok = ok && dot_verdict(res.witness->weights, r.lhs, r.rhs) == r.verdict;
    if (ok) {
      ++solved;
      Json w = Json::array();
      for (const auto& x : res.witness->weights) w.push_back(format_rational(x));
      weights.push_back(w);
    } else {
      ++failures;
    }
  }
  // The two hand infeasible instances.
  std::size_t certified = 0;
  {
    const VerdictSet vs(2, {{{1, 0}, {0, 1}, PairVerdict::succ}, {{0, 1}, {1, 0}, PairVerdict::succ}});
    const auto res = solve_linear_representation(vs);
    if (!res.feasible() && res.certificate && verify_certificate(vs, *res.certificate)) ++certified;
    o.report["opposite_strict"] = cli::representation_json(vs, res);
  }
  {
    const EventAlgebra alg(2);
    const auto rel = BinaryRelation::full(alg.carrier());
    const auto res = solve_qualitative_probability(rel, alg);
    const auto vs = event_verdicts(rel, alg);
    if (!res.feasible() && res.certificate && verify_certificate(vs, *res.certificate, Positivity::relaxed))
      ++certified;
    o.report["total_indifference"] = cli::measure_json(alg, res);
  }
  o.report["weights"] = weights;
  o.report["failures"] = failures;
  o.pass = failures == 0 && solved == 200 && certified == 2;
  o.detail = std::to_string(solved) + "/200 round-trips over " + std::to_string(rows_total) + " verdicts, " +
             std::to_string(certified) + "/2 infeasibility certificates re-verified";
  return o;
}

// 8 ------------------------------------------------------------------------

Outcome vacuity_suite() {
  Outcome o;
  const EventAlgebra alg(3);
  std::vector<EventProbe> probes;
  for (Event y = 0; y < 8; ++y)
    for (Event a = 0; a < 8; ++a)
      for (Event b = a;; b = (b + 1) | a) {
        for (Event c = b;; c = (c + 1) | b) {
          probes.push_back({"up", Direction::increasing, {a, b, c}, c, true, y});
          probes.push_back({"down", Direction::decreasing, {c, b, a}, a, true, y});
          if (c == 7) break;
        }
        if (b == 7) break;
      }
  std::mt19937_64 rng(1729);
  std::size_t violated = 0, holds = 0, vacuous = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto rel = BinaryRelation::from_index(alg.carrier(), rng());
    const auto rep = check_set_axioms(alg, relation_oracle(rel), probes);
    for (auto ax : {Axiom::c1, Axiom::c2, Axiom::c3}) {
      const auto v = rep[ax].verdict;
      if (v == AxiomVerdict::violated) ++violated;
      if (v == AxiomVerdict::holds_on_probes) ++holds;
      if (v == AxiomVerdict::vacuous) ++vacuous;
    }
  }
  // Vanishing sequence {1} < {1,2} < {1,2,3} below {16}, limit omega above it.
  const EventAlgebra big(16);
  const Event b = big.from_atoms({16});
  OracleTable<Event> table;
  std::vector<Event> window;
  for (std::size_t i = 1; i <= 3; ++i) {
    std::vector<std::size_t> atoms;
    for (std::size_t k = 1; k <= i; ++k) atoms.push_back(k);
    window.push_back(big.from_atoms(atoms));
    table.set(window.back(), b, PairVerdict::prec);
  }
  table.set(big.omega(), b, PairVerdict::succ);
  const EventProbe vanishing{"A_i = {1..i}", Direction::increasing, window, big.omega(), false, b};
  const auto oracle = table.oracle();
  const auto rep = check_set_axioms(big, oracle, {vanishing});
  const bool c2_violated = rep[Axiom::c2].verdict == AxiomVerdict::violated &&
                           probe_violates(Axiom::c2, oracle, vanishing);
  const auto sub = c3_violation_subprobe(oracle, vanishing);
  const bool sub_ok = probe_violates(Axiom::c2, oracle, sub);

  o.report["probes_per_relation"] = probes.size();
  o.report["axiom_verdicts"] = {{"holds", holds}, {"vacuous", vacuous}, {"violated", violated}};
  o.report["vanishing"] = cli::axiom_report_json(rep, {vanishing.name}, {});
  o.pass = violated == 0 && c2_violated && sub_ok;
  o.detail = "1000 relations x " + std::to_string(probes.size()) + " exhaustive probes: " + std::to_string(holds) +
             " holds, " + std::to_string(vacuous) + " vacuous, " + std::to_string(violated) +
             " violated; vanishing probe: C2 " + (c2_violated ? "violated and re-verified" : "NOT violated") +
             ", C3 sub-probe " + (sub_ok ? "re-verified" : "failed");
  return o;
}

// 9 ------------------------------------------------------------------------

std::string cli_output(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

Json cli_reports(unsigned threads) {
  const std::string dir = ORDKIT_TEST_DATA;
  Json j = Json::array();
  for (auto args : std::vector<std::vector<std::string>>{
           {"group", "--moduli", "2,2", "--exhaustive"},
           {"sigma", "--atoms", "3", "--sample", "20000", "--seed", "17"},
           {"orderable", "--topology", dir + "/sierpinski.json", "--mode", "criterion,search,weak,brute"},
           {"represent", "--input", dir + "/contradictory_strict.json"},
           {"probe", "--input", dir + "/vanishing_c2.json"}})
  {
    args.insert(args.begin(), {"--threads", std::to_string(threads)});
    j.push_back(cli_output(args));
  }
  return j;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print(int id, const std::string& title, bool pass, const std::string& detail, double secs) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << detail << ") [" << buf
            << "]" << std::endl;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> suites = {
      {"additivity theorems on Z3, Z4, Z2xZ2", additivity_suite},
      {"complete + Villegas-additive implies transitive", degroot_suite},
      {"ordered connected spaces satisfy the punctured-square criterion", forward_criterion_suite},
      {"weak-order search agrees with brute force; quotients are orderable", weak_order_suite},
      {"glue and lift outputs pass their certificates", glue_lift_suite},
      {"inf(-S) = -sup(S)", neg_sup_inf_suite},
      {"linear representation round-trip and infeasibility certificates", representation_suite},
      {"exhaustive probes are vacuous; vanishing probe breaks C2", vacuity_suite},
  };

  const unsigned many = std::max(4U, std::thread::hardware_concurrency());
  std::vector<std::string> serial;
  bool all = true;
  set_worker_threads(1);
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = suites[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    serial.push_back(o.report.dump());
    print(static_cast<int>(i + 1), suites[i].first, o.pass, o.detail, seconds_since(t0));
    all = all && o.pass;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::size_t identical = 0;
  std::vector<std::size_t> differing;
  std::string detail;
  try {
    set_worker_threads(many);
    for (std::size_t i = 0; i < suites.size(); ++i) {
      if (suites[i].second().report.dump() == serial[i])
        ++identical;
      else
        differing.push_back(i + 1);
    }
    const auto a = cli_reports(1).dump();
    const auto b = cli_reports(many).dump();
    if (a == b) ++identical;
    else differing.push_back(0);
    detail = std::to_string(identical) + "/" + std::to_string(suites.size() + 1) +
             " report sets byte-identical at 1 vs " + std::to_string(many) + " threads";
    for (auto d : differing) detail += d ? "; suite " + std::to_string(d) + " differs" : "; CLI reports differ";
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const bool det = differing.empty() && identical == suites.size() + 1;
  print(9, "reports independent of the worker count", det, detail, seconds_since(t0));
  all = all && det;
  return all ? 0 : 1;
}
