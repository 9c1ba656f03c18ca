#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "crank/asymptotics.hpp"
#include "crank/bounds.hpp"
#include "crank/errors.hpp"
#include "crank/exact_core.hpp"
#include "crank/exp_sums.hpp"
#include "crank/modular_core.hpp"
#include "crank/parallel.hpp"
#include "crank/special_fn.hpp"

using json = nlohmann::ordered_json;
using namespace crank;

namespace {

constexpr const char* kVersion = "0.3.0";

enum Exit { kOk = 0, kCheckFailed = 1, kDomain = 2, kCapacity = 3 };

std::string dec(const Real& x) { return to_decimal(x, 30); }
std::string str(const BigInt& x) { return x.get_str(); }

json provenance(const std::string& command, const json& params) {
  TruncationPolicy pol;
  return {{"tool", "crankstat"},
          {"version", kVersion},
          {"command", command},
          {"params", params},
          {"policy",
           {{"series_terms", pol.series_terms},
            {"target_abs_tol", pol.target_abs_tol},
            {"real_digits", std::numeric_limits<Real>::digits10},
            {"reduction", "pairwise, index ordered"}}}};
}

void emit(const std::string& command, const json& params, const json& result) {
  json out = {{"schema", 1}, {"provenance", provenance(command, params)}, {"result", result}};
  std::cout << out.dump(2) << "\n";
}

json breakdown_json(const AsymptoticBreakdown& bd) {
  json terms = json::array();
  for (const auto& t : bd.per_k_terms) terms.push_back({{"k", t.k}, {"value", dec(t.value)}, {"imag", dec(t.imag)}});
  json out = {{"target", to_string(bd.target)},
              {"cutoff", bd.cutoff},
              {"value", dec(bd.main_value)},
              {"imag_diagnostic", dec(bd.imag_diagnostic)},
              {"residual_estimate", dec(bd.residual_estimate)},
              {"per_k", terms}};
  if (!bd.per_j.empty()) {
    json js = json::array();
    for (const auto& s : bd.per_j)
      js.push_back({{"j", s.j}, {"rho", dec(s.rho)}, {"S", dec(s.S)}, {"T_plus", dec(s.T_plus)}, {"T_minus", dec(s.T_minus)}});
    out["per_j"] = js;
  }
  return out;
}

json budget_json(const ErrorBudget& eb) {
  json comp = json::object();
  for (const auto& [k, v] : eb.components) comp[k] = dec(v);
  return {{"a", eb.a},         {"b", eb.b},   {"c", eb.c}, {"n", eb.n}, {"components", comp},
          {"total", dec(eb.total)}, {"main_lower", dec(eb.main_lower)}};
}

json threshold_json(const ThresholdResult& r) {
  json out = {{"a", r.a}, {"b", r.b}, {"c", r.c}};
  if (r.d >= 0) out["d"] = r.d;
  out["sign"] = r.sign;
  out["N"] = r.N;
  out["confirmations"] = json::array({{{"n", r.N}, {"gap", dec(r.gap_N)}, {"holds", r.gap_N > 0}},
                                      {{"n", r.N2}, {"gap", dec(r.gap_N2)}, {"holds", r.gap_N2 > 0}},
                                      {{"n", r.N4}, {"gap", dec(r.gap_N4)}, {"holds", r.gap_N4 > 0}}});
  out["evaluated"] = r.evaluated;
  out["note"] = "smallest n whose predicate also holds at the 2n and 4n confirmation points";
  return out;
}

Convention parse_convention(const std::string& s) {
  if (s == "gf" || s == "generating_function") return Convention::GeneratingFunction;
  if (s == "combinatorial") return Convention::Combinatorial;
  throw DomainError("unknown convention " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crankstat: exact and asymptotic crank statistics"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: CRANK_THREADS or hardware)");

  // pn
  auto* pn = app.add_subcommand("pn", "exact p(n) and the truncated Rademacher series");
  long pn_n = 0, pn_kmax = -1;
  pn->add_option("-n", pn_n, "argument")->required();
  pn->add_option("--k-max", pn_kmax, "truncation (default floor(sqrt n))");

  // crank
  auto* cr = app.add_subcommand("crank", "crank tables, class counts and coefficients");
  cr->require_subcommand(1);
  auto* cr_table = cr->add_subcommand("table", "M(m,n) as CSV with columns n,m,coeff for |m| <= n");
  int t_max = 0;
  std::string t_conv = "gf", t_format = "csv";
  cr_table->add_option("--max-n", t_max, "largest n")->required();
  cr_table->add_option("--convention", t_conv, "gf or combinatorial")->check(CLI::IsMember({"gf", "combinatorial"}));
  cr_table->add_option("--format", t_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  long ca = 0, cb = 1, cc = 5, cn = 0;
  auto add_acn = [&](CLI::App* s, bool with_b) {
    s->add_option("-a", ca, "residue a")->required();
    if (with_b) s->add_option("-b", cb, "residue b")->required();
    s->add_option("-c", cc, "modulus")->required();
    s->add_option("-n", cn, "argument")->required();
  };
  auto* cr_class = cr->add_subcommand("class", "M(a,c;n), exact");
  add_acn(cr_class, false);
  auto* cr_cexact = cr->add_subcommand("coeff-exact", "coefficient of q^n in C(zeta_c^a; q), exact");
  add_acn(cr_cexact, false);
  auto* cr_casym = cr->add_subcommand("coeff-asym", "same coefficient from the asymptotic expansion");
  add_acn(cr_casym, false);
  auto* cr_diff = cr->add_subcommand("diff", "M(a,c;n) - M(b,c;n), exact and asymptotic");
  add_acn(cr_diff, true);

  // verify
  auto* ve = app.add_subcommand("verify", "pass/fail checks; exit 1 on any failure");
  ve->require_subcommand(1);
  auto* ve_cong = ve->add_subcommand("congruences", "Ramanujan congruences and equal crank classes");
  int cong_max = 120;
  ve_cong->add_option("--n-max", cong_max, "largest argument");
  auto* ve_tr = ve->add_subcommand("transforms", "transformation identities on a chart grid");
  std::string grid = "small";
  ve_tr->add_option("--grid", grid, "small or full")->check(CLI::IsMember({"small", "full"}));
  auto* ve_sg = ve->add_subcommand("signs", "sign tables for crank differences");
  long sg_c = 5, sg_max = 400;
  ve_sg->add_option("-c", sg_c, "modulus (5, 7, 9 or 11)")->required();
  ve_sg->add_option("--arg-max", sg_max, "largest argument");
  auto* ve_l1 = ve->add_subcommand("lemma1", "growth diagnostic for the exponential sums");
  long l1_c = 5, l1_n = 100, l1_k = 30;
  double l1_eps = 0.25;
  ve_l1->add_option("-c", l1_c, "odd prime modulus")->required();
  ve_l1->add_option("-n", l1_n, "argument");
  ve_l1->add_option("--k-max", l1_k, "largest k");
  ve_l1->add_option("--eps", l1_eps, "exponent slack");

  // bounds
  auto* bo = app.add_subcommand("bounds", "explicit error bounds and thresholds");
  bo->require_subcommand(1);
  auto* bo_budget = bo->add_subcommand("budget", "every bound component at one n");
  add_acn(bo_budget, true);
  auto* bo_thr = bo->add_subcommand("threshold", "threshold search; with -d, the small-c search along cn+d");
  long th_d = -1, th_cap = kThresholdCap;
  bo_thr->add_option("-a", ca, "residue a")->required();
  bo_thr->add_option("-b", cb, "residue b")->required();
  bo_thr->add_option("-c", cc, "modulus")->required();
  bo_thr->add_option("-d", th_d, "residue class of the argument (c in {5,7,9,11})");
  bo_thr->add_option("--cap", th_cap, "search cap");
  auto* bo_const = bo->add_subcommand("constants", "c1, c2, c3, delta0, f(c), log factor");
  bo_const->add_option("-c", cc, "odd modulus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kDomain;
  }
  if (threads > 0) set_worker_count(unsigned(threads));

  try {
    if (*pn) {
      if (pn_n < 0) throw DomainError("n must be >= 0");
      long kmax = pn_kmax < 0 ? farey_order(pn_n) : pn_kmax;
      BigInt exact = partition_number(pn_n);
      json res = {{"n", pn_n}, {"exact", str(exact)}, {"k_max", kmax}};
      if (pn_n == 0) {
        res["rademacher"] = "1";
        res["verdict"] = "match";
      } else {
        auto bd = partition_asym(pn_n, kmax);
        Real err = abs(bd.main_value - to_real(exact));
        res["rademacher"] = dec(bd.main_value);
        res["abs_error"] = dec(err);
        res["verdict"] = err < 0.5 ? "match" : "mismatch";
      }
      emit("pn", {{"n", pn_n}, {"k_max", kmax}}, res);
      return kOk;
    }

    if (*cr) {
      json params = {{"a", ca}, {"c", cc}, {"n", cn}};
      if (*cr_table) {
        if (t_max < 0) throw DomainError("max-n must be >= 0");
        Convention conv = parse_convention(t_conv);
        auto table = crank_table(t_max, conv);
        if (t_format == "csv") {
          table.write_csv(std::cout);
        } else {
          json rows = json::array();
          for (int n = 0; n <= t_max; ++n) {
            json row = json::array();
            for (const auto& v : table.row(n)) row.push_back(str(v));
            rows.push_back({{"n", n}, {"m_min", -n}, {"coeff", row}});
          }
          emit("crank table", {{"max_n", t_max}, {"convention", to_string(conv)}}, {{"rows", rows}});
        }
        return kOk;
      }
      if (cn < 0) throw DomainError("n must be >= 0");
      if (*cr_class) {
        auto table = crank_table(int(cn), Convention::GeneratingFunction);
        emit("crank class", params, {{"count", str(crank_class_count(int(ca), int(cc), int(cn), table))}});
      } else if (*cr_cexact) {
        auto table = crank_table(int(cn), Convention::GeneratingFunction);
        emit("crank coeff-exact", params, {{"value", dec(crank_coeff_exact(int(ca), int(cc), int(cn), table))}});
      } else if (*cr_casym) {
        auto table = crank_table(int(cn), Convention::GeneratingFunction);
        auto bd = crank_coeff_asym(ca, cc, cn);
        json res = breakdown_json(bd);
        res["exact"] = dec(crank_coeff_exact(int(ca), int(cc), int(cn), table));
        emit("crank coeff-asym", params, res);
      } else if (*cr_diff) {
        params = {{"a", ca}, {"b", cb}, {"c", cc}, {"n", cn}};
        auto table = crank_table(int(cn), Convention::GeneratingFunction);
        BigInt d = crank_class_count(int(ca), int(cc), int(cn), table) - crank_class_count(int(cb), int(cc), int(cn), table);
        json res = {{"exact", str(d)}, {"sign", sgn(d)}};
        if (is_prime(cc) && cc % 2 == 1 && 0 <= ca && ca <= cb && cb <= (cc - 1) / 2 && cn >= 1)
          res["asymptotic"] = breakdown_json(crank_difference_asym(ca, cb, cc, cn));
        emit("crank diff", params, res);
      }
      return kOk;
    }

    if (*ve) {
      bool ok = true;
      if (*ve_cong) {
        if (cong_max < 0) throw DomainError("n-max must be >= 0");
        auto table = crank_table(cong_max, Convention::GeneratingFunction);
        json reports = json::array();
        for (auto [p, s] : {std::pair{5, 4}, {7, 5}, {11, 6}}) {
          auto rep = verify_congruence(p, s, cong_max, table);
          json fails = json::array();
          for (const auto& ch : rep.checks)
            if (!ch.pn_divisible || !ch.classes_equal)
              fails.push_back({{"argument", ch.argument}, {"p", str(ch.pn)}, {"classes_equal", ch.classes_equal}});
          ok = ok && rep.all_pass();
          reports.push_back({{"prime", p}, {"shift", s}, {"checked", rep.checks.size()}, {"pass", rep.all_pass()},
                             {"failures", fails}});
        }
        emit("verify congruences", {{"n_max", cong_max}}, {{"pass", ok}, {"reports", reports}});
      } else if (*ve_tr) {
        auto cases = transform_grid(grid);
        auto res = parallel_map(cases.size(), [&](std::size_t i) { return transform_residual(cases[i]); });
        double worst = 0;
        json fails = json::array();
        for (std::size_t i = 0; i < cases.size(); ++i) {
          const auto& tc = cases[i];
          worst = std::max(worst, res[i]);
          if (!(res[i] < 1e-9))
            fails.push_back({{"a", tc.a}, {"c", tc.c}, {"h", tc.h}, {"k", tc.k},
                             {"z", {tc.z.real(), tc.z.imag()}}, {"residual", res[i]}});
        }
        auto ig = identity_grid();
        bool id_ok = ig.eta_max < 1e-10 && ig.theta_max < 1e-10 && ig.triple_max < 1e-10;
        ok = fails.empty() && id_ok;
        emit("verify transforms", {{"grid", grid}},
             {{"pass", ok},
              {"charts", cases.size()},
              {"max_residual", worst},
              {"tolerance", 1e-9},
              {"failures", fails},
              {"identities",
               {{"points", ig.points}, {"eta_max", ig.eta_max}, {"theta_max", ig.theta_max},
                {"triple_product_max", ig.triple_max}, {"tolerance", 1e-10}}}});
      } else if (*ve_sg) {
        auto table = crank_table(int(sg_max), Convention::GeneratingFunction);
        auto rep = verify_sign_table(sg_c, table, sg_max);
        json checks = json::array(), fails = json::array(), unl = json::array();
        for (const auto& ch : rep.checks) {
          json row = {{"a", ch.entry.a}, {"b", ch.entry.b}, {"d", ch.entry.d}, {"listed", ch.entry.reference},
                      {"predicted", ch.entry.predicted}, {"last_mismatch", ch.last_mismatch}};
          row["stabilization"] = ch.stabilization ? json(*ch.stabilization) : json(nullptr);
          checks.push_back(row);
          if (!ch.stabilization) fails.push_back(row);
        }
        for (const auto& e : rep.unlisted_nonzero)
          unl.push_back({{"a", e.a}, {"b", e.b}, {"d", e.d}, {"predicted", e.predicted}});
        ok = rep.all_stable();
        json res = {{"pass", ok}, {"c", sg_c}, {"argument", std::to_string(sg_c) + "n+d"}};
        res["ramanujan_shift"] = rep.ramanujan_shift >= 0 ? json(rep.ramanujan_shift) : json(nullptr);
        res["ramanujan_zero"] = rep.ramanujan_zero;
        res["failures"] = fails;
        res["unlisted_nonzero"] = unl;
        res["checks"] = checks;
        emit("verify signs", {{"c", sg_c}, {"arg_max", sg_max}}, res);
      } else if (*ve_l1) {
        auto rep = lemma1_diagnostic(l1_c, l1_n, l1_k, l1_eps);
        json rows = json::array();
        for (const auto& r : rep.rows)
          rows.push_back({{"k", r.k}, {"kind", to_string(r.kind)}, {"abs_sum", r.abs_sum}, {"bound", r.bound},
                          {"ratio", r.ratio}});
        ok = !rep.growth_flag;
        emit("verify lemma1", {{"c", l1_c}, {"n", l1_n}, {"k_max", l1_k}, {"eps", l1_eps}},
             {{"pass", ok}, {"max_ratio", rep.max_ratio}, {"growth_flag", rep.growth_flag}, {"rows", rows}});
      }
      return ok ? kOk : kCheckFailed;
    }

    if (*bo) {
      if (*bo_budget) {
        emit("bounds budget", {{"a", ca}, {"b", cb}, {"c", cc}, {"n", cn}}, budget_json(error_budget(ca, cb, cc, cn)));
      } else if (*bo_thr) {
        json params = {{"a", ca}, {"b", cb}, {"c", cc}};
        if (th_d >= 0) params["d"] = th_d;
        params["cap"] = th_cap;
        auto r = th_d >= 0 ? threshold_N_small_c(ca, cb, cc, th_d, th_cap) : threshold_N(ca, cb, cc, th_cap);
        emit("bounds threshold", params, threshold_json(r));
      } else if (*bo_const) {
        auto k = constants(cc);
        emit("bounds constants", {{"c", cc}},
             {{"c1", dec(k.c1)},
              {"c2", dec(k.c2)},
              {"c3", dec(k.c3)},
              {"tails", {{"c1", dec(k.c1_tail)}, {"c2", dec(k.c2_tail)}, {"c3", dec(k.c3_tail)}}},
              {"delta0", k.delta0.get_str()},
              {"delta0_decimal", dec(to_real(k.delta0))},
              {"f_c", dec(k.f_c)},
              {"log_factor", dec(k.log_factor)}});
      }
      return kOk;
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const DomainError& e) {
    std::cerr << "domain: " << e.what() << "\n";
    return kDomain;
  } catch (const RangeError& e) {
    std::cerr << "range: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
