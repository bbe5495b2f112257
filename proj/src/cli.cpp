#include "psi/cli.hpp"

#include <fstream>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "psi/checks.hpp"
#include "psi/curves.hpp"
#include "psi/graded.hpp"
#include "psi/groebner.hpp"
#include "psi/koszul.hpp"
#include "psi/parallel.hpp"
#include "psi/series.hpp"

namespace psi {

namespace {

struct Args {
  // global
  std::string field = "rational";
  std::string pivot = "cyclic";
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  std::size_t threads = 1;
  bool timings = false;
  // per subcommand
  std::string kind = "an";
  int n = 0;
  int m = 0;
  int max_total = 4;
  std::optional<int> cap;
  std::string order = "grevlex";
  int kmax = 4;
  std::size_t max_columns = 1'000'000;
  int count = 10;
  std::size_t budget = 200'000;
  std::optional<std::size_t> codim;
  int criterion = 1;
};

CheckOptions check_options(const Args& a) {
  CheckOptions o;
  o.threads = std::max<std::size_t>(1, a.threads);
  o.seed = a.seed;
  o.singular_budget = a.budget;
  o.koszul_max_columns = a.max_columns;
  if (a.field == "rational") {
    o.prime_field = false;
  } else if (a.field.rfind("prime", 0) == 0) {
    o.prime_field = true;
    if (a.field.size() > 6 && a.field[5] == ':') {
      unsigned long long p = 0;
      try {
        p = std::stoull(a.field.substr(6));
      } catch (const std::exception&) {
        throw UsageError("bad prime in --field: " + a.field);
      }
      if (p > 0xffffffffull || !is_prime(p))
        throw UsageError("--field prime:p needs a prime below 2^32, got " + a.field.substr(6));
      o.prime = static_cast<std::uint32_t>(p);
    } else if (a.field != "prime") {
      throw UsageError("unknown field: " + a.field + " (rational or prime:p)");
    }
  } else {
    throw UsageError("unknown field: " + a.field + " (rational or prime:p)");
  }
  return o;
}

PresentationSpec make_spec(const Args& a) {
  auto order = MonomialOrder::Kind::GrevLex;
  try {
    order = MonomialOrder::parse_kind(a.order);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto kind = parse_algebra_kind(a.kind);
  if (kind == AlgebraKind::An) {
    if (a.n < 3)
      throw UsageError("A_n needs n >= 3, got " + std::to_string(a.n));
    return build_An(a.n, PivotScheme::parse(a.pivot, a.n), order);
  }
  if (a.n < 2 || a.m < 1)
    throw UsageError("B_{n,m} needs n >= 2 and m >= 1");
  PivotScheme::parse(a.pivot, a.n, a.m);  // validates the name
  return build_Bnm(a.n, a.m, order);
}

template <class C>
Json poly_json(const Poly<C>& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json x;
    x["coeff"] = to_string(t.coeff);
    x["monomial"] = p.ring()->to_string(t.mono);
    terms.push_back(std::move(x));
  }
  return terms;
}

Report base_report(const std::string& title, const Args& a, const CheckOptions& o) {
  Report r;
  r.title = title;
  r.config = config_echo(o);
  r.config["subcommand"] = title;
  r.include_timings = a.timings;
  return r;
}

void echo_spec(Report& r, const Args&, const PresentationSpec& spec) {
  r.config["kind"] = to_string(spec.kind);
  r.config["n"] = spec.n;
  if (spec.kind == AlgebraKind::Bnm)
    r.config["m"] = spec.m;
  r.config["pivot"] = spec.pivot.name();
  r.config["order"] = spec.ring->order().name();
}

Report cmd_presentation_dump(const Args& a, const CheckOptions& o) {
  auto spec = make_spec(a);
  Report r = base_report("presentation dump", a, o);
  echo_spec(r, a, spec);
  Json vars = Json::array();
  for (std::size_t k = 0; k < spec.num_vars(); ++k) {
    Json v;
    v["name"] = spec.ring->var(k).name();
    v["block"] = spec.ring->var(k).block();
    vars.push_back(std::move(v));
  }
  Json rels = Json::array();
  for (std::size_t k = 0; k < spec.relations.size(); ++k) {
    Json x;
    x["pair"] = {spec.pairs[k].i, spec.pairs[k].j};
    x["text"] = spec.relations[k].to_string();
    x["terms"] = poly_json(spec.relations[k]);
    rels.push_back(std::move(x));
  }
  r.data["variables"] = std::move(vars);
  r.data["relations"] = std::move(rels);

  auto counts = relation_degree_audit(spec);
  const int want = spec.kind == AlgebraKind::An ? spec.n - 3 : (spec.n - 2) + (spec.m - 1);
  bool ok = true;
  Json got = Json::object();
  for (int i = 1; i <= spec.n; ++i)
    for (int j = i + 1; j <= spec.n; ++j) {
      auto it = counts.find({i, j});
      int c = it == counts.end() ? 0 : it->second;
      got[std::to_string(i) + "," + std::to_string(j)] = c;
      ok = ok && c == want;
    }
  Json in;
  in["algebra"] = spec.label();
  r.add("presentation.audit", "every relation has degree e_i+e_j; count per pair", std::move(in), want,
        std::move(got), ok ? Status::Pass : Status::Fail);
  return r;
}

Report cmd_hilbert_lee(const Args& a, const CheckOptions& o) {
  if (a.n < 2 || a.max_total < 0)
    throw UsageError("hilbert lee needs --n >= 3 (or --n >= 2 with --m) and --max-total >= 0");
  Report r = base_report("hilbert lee", a, o);
  r.config["n"] = a.n;
  r.config["m"] = a.m;
  r.config["max_total"] = a.max_total;
  auto bound = SeriesBound::total(a.max_total);
  TruncatedSeries s = [&] {
    try {
      return a.m > 0 ? lee_series_restricted(a.n, a.m, bound) : lee_series(a.n, bound);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  CoefficientTable t;
  for (int i = 1; i <= a.n; ++i)
    t.columns.push_back("a" + std::to_string(i));
  t.columns.push_back("coefficient");
  for (const auto& v : degree_vectors_up_to(a.n, a.max_total)) {
    std::vector<Json> row(v.begin(), v.end());
    row.push_back(s.coefficient(v));
    t.rows.push_back(std::move(row));
  }
  r.tables.emplace_back("lee", std::move(t));
  if (a.m == 0) {
    Json in;
    in["n"] = a.n;
    in["max_total"] = a.max_total;
    auto diag = s.diagonal_sums();
    auto total = total_hilbert(a.n, a.max_total);
    r.add("hilbert.lee", "diagonal sums equal (1+(n-1)t)^(n-3)/(1-t)^(2n-3)", std::move(in), total, diag,
          diag == total ? Status::Pass : Status::Fail);
  }
  return r;
}

Report cmd_hilbert_brute(const Args& a, const CheckOptions& o) {
  auto spec = make_spec(a);
  Report r = base_report("hilbert brute", a, o);
  echo_spec(r, a, spec);
  r.config["max_total"] = a.max_total;
  RankPolicy policy;
  policy.prime = o.prime;
  if (o.prime_field)
    policy.verify_max_cols = 0;
  auto vecs = degree_vectors_up_to(spec.n, a.max_total);
  auto dims = parallel_map(o.threads, vecs.size(), [&](std::size_t k) { return graded_dim_detail(spec, vecs[k], policy); });
  CoefficientTable t;
  for (int i = 1; i <= spec.n; ++i)
    t.columns.push_back("a" + std::to_string(i));
  t.columns.insert(t.columns.end(), {"dim", "monomials", "rank", "verified_q"});
  std::size_t bad = 0;
  for (std::size_t k = 0; k < vecs.size(); ++k) {
    std::vector<Json> row(vecs[k].begin(), vecs[k].end());
    row.push_back(dims[k].dim);
    row.push_back(dims[k].columns);
    row.push_back(dims[k].rank);
    row.push_back(dims[k].verified_q);
    t.rows.push_back(std::move(row));
    bad += dims[k].bad_prime ? 1 : 0;
  }
  r.tables.emplace_back("brute " + spec.label(), std::move(t));
  Json in;
  in["algebra"] = spec.label();
  r.add("hilbert.brute", "modular slice ranks agree with rational ranks where verified", std::move(in),
        "0 bad-prime slices", bad, bad == 0 ? Status::Pass : Status::Informative);
  return r;
}

Report cmd_hilbert_verify(const Args& a, const CheckOptions& o, std::ostream& err) {
  auto spec = make_spec(a);
  Report r = base_report("hilbert verify", a, o);
  echo_spec(r, a, spec);
  r.config["max_total"] = a.max_total;
  add_hilbert_identity(r, spec, a.max_total, o);
  const auto& rec = r.checks.back();
  if (rec.status == Status::Fail)
    err << "first offending multidegree: " << rec.got["first_mismatch"].dump() << "\n";
  return r;
}

template <class C>
void gb_data(Report& r, const GroebnerBasis<C>& gb) {
  r.data["basis_size"] = gb.gens.size();
  Json hist = Json::object();
  for (auto [d, c] : gb.degree_histogram())
    hist[std::to_string(d)] = c;
  r.data["degree_histogram"] = std::move(hist);
  Json stats;
  stats["pairs_created"] = gb.stats.pairs_created;
  stats["pairs_eliminated"] = gb.stats.pairs_eliminated;
  stats["reductions"] = gb.stats.reductions;
  stats["zero_reductions"] = gb.stats.zero_reductions;
  r.data["stats"] = std::move(stats);
  Json basis = Json::array();
  for (const auto& g : gb.gens)
    basis.push_back(g.to_string());
  r.data["basis"] = std::move(basis);
}

// Basis over F_p; over Q as well when the field is rational and the
// modular basis is small, comparing leading monomials.
Report cmd_gb_run(const Args& a, const CheckOptions& o) {
  constexpr std::size_t kRationalRerunMax = 200;
  auto spec = make_spec(a);
  Report r = base_report("gb run", a, o);
  echo_spec(r, a, spec);
  if (a.cap)
    r.config["cap"] = *a.cap;
  auto gbp = buchberger(relations_over(spec, PrimeField(o.prime)), a.cap);
  gb_data(r, gbp);
  r.data["coefficients"] = PrimeField(o.prime).name();
  Json in;
  in["algebra"] = spec.label();
  if (!o.prime_field && gbp.gens.size() <= kRationalRerunMax) {
    auto gbq = buchberger(relations_over(spec, RationalField()), a.cap);
    gb_data(r, gbq);
    r.data["coefficients"] = "rational";
    Json got;
    got["prime_basis_size"] = gbp.gens.size();
    got["rational_basis_size"] = gbq.gens.size();
    const bool same = gbp.leading_monomials() == gbq.leading_monomials();
    r.add("groebner.run", "leading monomials over F_p and over Q agree", in, "equal", std::move(got),
          same ? Status::Pass : Status::Fail);
  }
  if (a.cap) {
    r.data["dimension"] = nullptr;
    return r;
  }
  const auto dim = krull_dimension(gbp);
  r.data["dimension"] = dim;
  if (spec.kind == AlgebraKind::An) {
    const std::size_t want = static_cast<std::size_t>(2 * spec.n - 3);
    r.add("theorem_a.krull", "Krull dimension of " + spec.label(), std::move(in), want, dim,
          dim == want ? Status::Pass : Status::Fail);
  } else if (spec.n == 2 && spec.m == 2) {
    // the conifold: a hypersurface in 4 variables
    r.add("groebner.krull", "Krull dimension of " + spec.label(), std::move(in), 3, dim,
          dim == 3 ? Status::Pass : Status::Fail);
  } else {
    r.add("groebner.krull", "Krull dimension of " + spec.label(), std::move(in), nullptr, dim, Status::Informative);
  }
  return r;
}

Report cmd_koszul(const Args& a, const CheckOptions& o) {
  if (a.n < 3 || a.kmax < 0)
    throw UsageError("koszul needs --n >= 3 and --kmax >= 0");
  Report r = base_report("koszul", a, o);
  r.config["n"] = a.n;
  r.config["kmax"] = a.kmax;
  r.config["max_columns"] = a.max_columns;
  add_koszul(r, a.n, a.kmax, o);
  return r;
}

template <class F>
void sample_into(Report& r, const PresentationSpec& spec, const F& field, const Args& a, const CheckOptions& o) {
  auto rng = task_rng(o.seed, "sample " + spec.label() + " " + field.name());
  Json points = Json::array();
  int fails = 0, cij_fails = 0;
  for (int t = 0; t < a.count; ++t) {
    auto ic = sample_integer_config(spec.n, spec.kind == AlgebraKind::Bnm ? spec.m : 0, rng);
    auto cfg = make_config(field, ic.z, ic.lambda, ic.q);
    auto pt = alpha_from_config(cfg, spec, field.zero());
    auto v = verify_vanishing(spec, field, pt);
    Json x;
    x["z"] = ic.z;
    x["lambda"] = ic.lambda;
    if (!ic.q.empty())
      x["q"] = ic.q;
    Json coords = Json::object();
    for (std::size_t k = 0; k < pt.size(); ++k)
      coords[spec.ring->var(k).name()] = to_string(pt[k]);
    x["point"] = std::move(coords);
    x["vanishes"] = v.ok;
    if (!v.ok) {
      ++fails;
      x["failing_relation"] = *v.first_failure;
    }
    if (spec.n >= 3) {
      auto c = cij_consistency(cfg, field.zero());
      x["cij_consistent"] = c.ok;
      if (!c.ok) {
        ++cij_fails;
        x["cij_witness"] = *c.witness;
      }
    }
    points.push_back(std::move(x));
  }
  r.data["points"] = std::move(points);
  Json in;
  in["algebra"] = spec.label();
  in["configs"] = a.count;
  in["field"] = field.name();
  r.add("sample.vanishing", "all relations vanish at sampled configurations", in, "0 failures", fails,
        fails == 0 ? Status::Pass : Status::Fail);
  if (spec.n >= 3)
    r.add("sample.cij", "c_ij does not depend on k", std::move(in), "0 failures", cij_fails,
          cij_fails == 0 ? Status::Pass : Status::Fail);
}

Report cmd_sample(const Args& a, const CheckOptions& o) {
  auto spec = make_spec(a);
  if (a.count < 0)
    throw UsageError("--count must be non-negative");
  Report r = base_report("sample", a, o);
  echo_spec(r, a, spec);
  r.config["count"] = a.count;
  if (o.prime_field)
    sample_into(r, spec, PrimeField(o.prime), a, o);
  else
    sample_into(r, spec, RationalField(), a, o);
  return r;
}

Report cmd_singular(const Args& a, const CheckOptions& o) {
  auto spec = make_spec(a);
  Report r = base_report("singular", a, o);
  echo_spec(r, a, spec);
  r.config["budget"] = a.budget;
  if (a.codim) {
    // explicit codimension: report the locus without an expectation
    auto res = singular_locus_dim(spec, *a.codim, a.budget, o.prime);
    Json in;
    in["algebra"] = spec.label();
    in["codimension"] = *a.codim;
    Json got;
    got["minors"] = res.minors;
    got["independent_minors"] = res.independent_minors;
    got["dimension"] = res.empty ? Json("empty") : Json(res.dimension);
    r.add("smooth.singular_locus", "V(relations + c x c minors)", std::move(in), nullptr, std::move(got),
          Status::Informative);
    return r;
  }
  add_singular_locus(r, spec, o);
  return r;
}

Report cmd_verify_theorem_a(const Args& a, const CheckOptions& o) {
  if (a.n < 3)
    throw UsageError("verify-theorem-a needs --n >= 3, got " + std::to_string(a.n));
  if (a.max_total < 0)
    throw UsageError("--max-total must be non-negative");
  Args an = a;
  an.kind = "an";
  auto spec = make_spec(an);
  Report r = base_report("verify-theorem-a", a, o);
  echo_spec(r, a, spec);
  r.config["max_total"] = a.max_total;
  r.merge(cmd_presentation_dump(an, o));
  r.data = Json::object();
  add_hilbert_identity(r, spec, a.max_total, o);
  add_pointwise_anchors(r, a.n, o);
  add_krull(r, spec, static_cast<std::size_t>(2 * a.n - 3), o);
  return r;
}

Report cmd_acceptance(const Args& a, const CheckOptions& o) {
  Report r = acceptance_report(a.criterion, o);
  r.include_timings = a.timings;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for psi-class algebras of genus-0 moduli spaces", "psi"};
  app.fallthrough();
  app.require_subcommand(1);
  Args a;

  app.add_option("--field", a.field, "rational or prime:p")->capture_default_str();
  app.add_option("--pivot", a.pivot, "cyclic or common")->capture_default_str();
  app.add_option("--seed", a.seed, "64-bit seed for every random choice")->capture_default_str();
  app.add_option("--format", a.format, "json, csv or md")->capture_default_str();
  app.add_option("--out", a.out, "write the report here instead of stdout");
  app.add_option("--threads", a.threads, "worker threads")->capture_default_str();
  app.add_flag("--timings", a.timings, "include wall-clock timings (reports stop being byte-stable)");

  auto spec_opts = [&](CLI::App* c) {
    c->add_option("--kind", a.kind, "an or bnm")->capture_default_str();
    c->add_option("--n", a.n, "number of marked points")->required();
    c->add_option("--m", a.m, "extra points (bnm)")->capture_default_str();
    c->add_option("--order", a.order, "grevlex, lex or block-grevlex")->capture_default_str();
  };

  std::function<Report()> action;

  auto* pres = app.add_subcommand("presentation", "presentations")->require_subcommand(1);
  auto* dump = pres->add_subcommand("dump", "variables and relations");
  spec_opts(dump);
  dump->callback([&] { action = [&] { return cmd_presentation_dump(a, check_options(a)); }; });

  auto* hil = app.add_subcommand("hilbert", "Hilbert functions")->require_subcommand(1);
  auto* lee = hil->add_subcommand("lee", "coefficients of the Lee series");
  lee->add_option("--n", a.n, "number of marked points")->required();
  lee->add_option("--m", a.m, "restricted series for B_{n,m}")->capture_default_str();
  lee->add_option("--max-total", a.max_total, "max total degree")->capture_default_str();
  lee->callback([&] { action = [&] { return cmd_hilbert_lee(a, check_options(a)); }; });
  auto* brute = hil->add_subcommand("brute", "graded dimensions by linear algebra");
  spec_opts(brute);
  brute->add_option("--max-total", a.max_total, "max total degree")->capture_default_str();
  brute->callback([&] { action = [&] { return cmd_hilbert_brute(a, check_options(a)); }; });
  std::ostream* errp = &err;
  auto* verify = hil->add_subcommand("verify", "brute force against the Lee series");
  spec_opts(verify);
  verify->add_option("--max-total", a.max_total, "max total degree")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_hilbert_verify(a, check_options(a), *errp); }; });

  auto* gb = app.add_subcommand("gb", "Groebner bases")->require_subcommand(1);
  auto* gbrun = gb->add_subcommand("run", "reduced Groebner basis of the relations");
  spec_opts(gbrun);
  gbrun->add_option("--cap", a.cap, "stop after this total degree");
  gbrun->callback([&] { action = [&] { return cmd_gb_run(a, check_options(a)); }; });

  auto* kz = app.add_subcommand("koszul", "quadratic dual dimensions against the prediction");
  kz->add_option("--n", a.n, "number of marked points")->required();
  kz->add_option("--kmax", a.kmax, "top degree")->capture_default_str();
  kz->add_option("--max-columns", a.max_columns, "budget on dim V^k")->capture_default_str();
  kz->callback([&] { action = [&] { return cmd_koszul(a, check_options(a)); }; });

  auto* smp = app.add_subcommand("sample", "points from configurations on the line");
  spec_opts(smp);
  smp->add_option("--count", a.count, "number of configurations")->capture_default_str();
  smp->callback([&] { action = [&] { return cmd_sample(a, check_options(a)); }; });

  auto* sing = app.add_subcommand("singular", "dimension of the singular locus");
  spec_opts(sing);
  sing->add_option("--budget", a.budget, "max number of minors")->capture_default_str();
  sing->add_option("--codim", a.codim, "minor size (default: codimension of the variety)");
  sing->callback([&] { action = [&] { return cmd_singular(a, check_options(a)); }; });

  auto* vta = app.add_subcommand("verify-theorem-a", "presentation, Hilbert function and dimension of A_n");
  vta->add_option("--n", a.n, "number of marked points")->required();
  vta->add_option("--max-total", a.max_total, "max total degree")->capture_default_str();
  vta->callback([&] { action = [&] { return cmd_verify_theorem_a(a, check_options(a)); }; });

  auto* acc = app.add_subcommand("acceptance", "run one acceptance criterion (1..8)");
  acc->add_option("--criterion", a.criterion, "criterion number")->required()->check(CLI::Range(1, 8));
  acc->callback([&] { action = [&] { return cmd_acceptance(a, check_options(a)); }; });

  std::vector<std::string> argv_store{"psi"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store)
    argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "psi: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Format fmt = parse_format(a.format);
    Report r = action();
    r.include_timings = a.timings;
    std::string text = render(r, fmt);
    if (a.out.empty()) {
      out << text;
    } else {
      std::ofstream f(a.out, std::ios::binary);
      if (!f)
        throw UsageError("cannot open --out file " + a.out);
      f << text;
    }
    if (exit_code(r) != 0)
      err << "psi: a check failed (overall: " << to_string(r.overall()) << ")\n";
    return exit_code(r) == 0 ? kExitPass : kExitCheckFailed;
  } catch (const BudgetExceeded& e) {
    err << "psi: budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // UsageError derives from invalid_argument, itself a logic_error
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
      err << "psi: " << e.what() << "\n";
      return kExitUsage;
    }
    err << "psi: internal consistency check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "psi: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace psi
