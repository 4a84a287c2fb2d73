#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "crsym/fields.hpp"
#include "crsym/hypersurface.hpp"
#include "crsym/kostant.hpp"
#include "crsym/liestruct.hpp"
#include "crsym/parabolic.hpp"

namespace crsym::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string eps;
  std::string model;
  std::string fields;
  std::string a0 = "full";
  std::string check;
  int n = -1;
  int degree = -1;
  int p = -1;
  int q = -1;
  int k = -1;
  int max_degree = 3;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json rat(const Rational& x) { return x.get_str(); }

json sparse(const SparseVec<Rational>& v) {
  json a = json::array();
  for (const auto& [i, x] : v) a.push_back({i, rat(x)});
  return a;
}

json sparse(const SparseVec<Gaussian>& v) {
  json a = json::array();
  for (const auto& [i, x] : v) a.push_back({i, x.str()});
  return a;
}

template <class T>
json sparse_list(const std::vector<SparseVec<T>>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(sparse(v));
  return a;
}

json signature_json(const Signature& s) { return {{"pos", s.pos}, {"neg", s.neg}, {"zero", s.zero}}; }

std::vector<int> default_eps(Family f, int n, const std::string& text) {
  if (!text.empty()) return parse_signs(text);
  if (f == Family::Indefinite) return std::vector<int>(static_cast<size_t>(std::max(n - 2, 0)), 1);
  if (f == Family::Flat) return std::vector<int>(static_cast<size_t>(std::max(n, 0)), 1);
  return {};
}

void need_n(const Options& o) {
  if (o.n < 0) throw UsageError("--n is required");
}

HypersurfaceModel load_model(const Options& o, json& params) {
  if (!o.model.empty()) {
    HypersurfaceModel m = parse_model_file(read_file(o.model));
    params["model"] = o.model;
    if (o.n >= 0 && o.n != m.n()) throw std::invalid_argument("--n " + std::to_string(o.n) + " does not match the model file (n = " + std::to_string(m.n()) + ")");
    params["n"] = m.n();
    return m;
  }
  if (o.family.empty()) throw UsageError("--family or --model is required");
  need_n(o);
  Family f = parse_family(o.family);
  auto eps = default_eps(f, o.n, o.eps);
  params["family"] = o.family;
  params["n"] = o.n;
  if (!eps.empty()) params["eps"] = signs_str(eps);
  return builtin_model(f, o.n, eps);
}

json field_entry(const LabeledField& f) { return {{"label", f.label}, {"field", f.field.str()}}; }

// ---------------------------------------------------------------------------

void cmd_verify(const Options& o, json& params, json& result, json& cert) {
  if (!o.fields.empty() && o.model.empty()) throw UsageError("--fields requires --model");
  if (!o.model.empty() && o.fields.empty()) throw UsageError("--model requires --fields for verify");
  HypersurfaceModel model = load_model(o, params);
  FieldBasis basis;
  if (!o.fields.empty()) {
    params["fields"] = o.fields;
    basis = parse_field_file(model.n(), read_file(o.fields));
  } else if (model.family() == Family::Flat) {
    SymmetrySolution sol = solve_symmetries(model, 2);
    for (size_t i = 0; i < sol.basis.size(); ++i) basis.push_back({"X_" + std::to_string(i + 1), sol.basis[i]});
  } else {
    basis = builtin_symmetries(model.family(), model.n(), model.eps());
  }
  json bad = json::array(), fields = json::array();
  for (const auto& f : basis) {
    Expr r = tangency_residual(model, f.field);
    bool ok = r.is_zero();
    if (!ok) bad.push_back({{"label", f.label}, {"residual", r.str()}});
    json e = field_entry(f);
    e["tangent"] = ok;
    fields.push_back(std::move(e));
  }
  LeviSignature sig = levi_signature(model);
  result = {{"allTangent", bad.empty()},
            {"count", basis.size()},
            {"nonTangent", bad},
            {"leviSignature", {{"pos", sig.pos}, {"neg", sig.neg}, {"null", sig.null}}}};
  cert = {{"potential", model.potential().str()}, {"fields", fields}};
}

void cmd_solve(const Options& o, json& params, json& result, json& cert) {
  if (o.degree < 0) throw UsageError("--degree is required");
  HypersurfaceModel model = load_model(o, params);
  params["degree"] = o.degree;
  SymmetrySolution sol = solve_symmetries(model, o.degree);
  result = {{"dimension", sol.dimension},
            {"degree", sol.degree},
            {"unknowns", sol.unknowns},
            {"equations", sol.equations},
            {"clearingPower", sol.clearing_power}};
  json fields = json::array();
  for (const auto& f : sol.basis) fields.push_back(f.str());
  cert = {{"potential", model.potential().str()}, {"basis", fields}, {"kernel", sparse_list(sol.kernel)}};
}

void cmd_structure(const Options& o, json& params, json& result, json& cert) {
  if (o.family.empty()) throw UsageError("--family is required");
  need_n(o);
  Family f = parse_family(o.family);
  auto eps = default_eps(f, o.n, o.eps);
  params["family"] = o.family;
  params["n"] = o.n;
  if (!eps.empty()) params["eps"] = signs_str(eps);
  RealLieAlgebra L = close_and_structure(builtin_symmetries(f, o.n, eps));
  RadicalReport rad = radical_and_series(L);
  KillingForm kf = killing_form(L);
  LeviCandidate cand = catalog_levi_candidate(f, o.n, eps, L);
  LeviVerdict v = levi_check(L, cand.subspace);
  json levi = {{"pass", v.pass}, {"failed", v.failed}, {"dim", v.dim}, {"reference", cand.reference}};
  if (v.pass && cand.reference == "0") {
    levi["fingerprintMatch"] = v.dim == 0;
    levi["mismatch"] = json::array();
  } else if (v.pass) {
    auto mism = fingerprint_mismatch(fingerprint(L.subalgebra(cand.subspace.basis)),
                                     fingerprint(reference_algebra(cand.reference)));
    levi["fingerprintMatch"] = mism.empty();
    levi["mismatch"] = mism;
  }
  result = {{"closed", true},
            {"dimension", L.dim()},
            {"killingSignature", signature_json(kf.signature)},
            {"radicalDim", rad.radical.dim()},
            {"radicalDerivedSeries", rad.radical_derived},
            {"radicalDerivedLength", rad.radical_derived_length},
            {"derivedSeries", rad.derived},
            {"lowerCentralSeries", rad.lower_central},
            {"centerDim", rad.center_dim},
            {"levi", levi}};
  json triples = json::array();
  for (const auto& [a, b, c, x] : L.triples()) triples.push_back({a, b, c, rat(x)});
  cert = {{"labels", L.labels()},
          {"structureConstants", triples},
          {"radical", sparse_list(rad.radical.basis)},
          {"leviCandidate", sparse_list(cand.subspace.basis)}};
}

void cmd_levi_form(const Options& o, json& params, json& result, json& cert) {
  HypersurfaceModel model = load_model(o, params);
  auto m = levi_matrix(model);
  LeviSignature sig = levi_signature(model);
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  result = {{"signature", {{"pos", sig.pos}, {"neg", sig.neg}, {"null", sig.null}}}};
  cert = {{"potential", model.potential().str()}, {"matrix", rows}};
}

GradedSU need_su(const Options& o, json& params) {
  if (o.p < 0 || o.q < 0) throw UsageError("--p and --q are required");
  params["p"] = o.p;
  params["q"] = o.q;
  return graded_su(o.p, o.q);
}

void cmd_parabolic(const Options& o, json& params, json& result, json& cert) {
  GradedSU G = need_su(o, params);
  auto d = G.real.dims();
  result = {{"n", G.n}, {"dims", d}, {"total", G.real.dim()}, {"gradingElement", matrix_str(G.grading_element())}};
  json basis = json::object();
  for (int deg = -2; deg <= 2; ++deg) {
    json b = json::array();
    for (int a = G.real.begin(deg); a < G.real.end(deg); ++a) b.push_back(matrix_str(G.real.basis(a)));
    basis[std::to_string(deg)] = b;
  }
  cert = {{"form", matrix_str(G.form)}, {"basis", basis}};
}

std::vector<SparseVec<Rational>> read_subspace(const std::string& path, int dim0) {
  json j = json::parse(read_file(path));
  if (!j.is_array()) throw std::invalid_argument("subspace file must be a JSON array of sparse vectors");
  std::vector<SparseVec<Rational>> out;
  for (const auto& v : j) {
    SparseVec<Rational> s;
    for (const auto& e : v) {
      int i = e.at(0).get<int>();
      if (i < 0 || i >= dim0) throw std::invalid_argument("coordinate " + std::to_string(i) + " outside g_0");
      Rational x = parse_rational(e.at(1).get<std::string>());
      if (!s.empty() && s.back().first >= i) throw std::invalid_argument("sparse vector indices must increase");
      if (x != 0) s.emplace_back(i, x);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void cmd_prolong(const Options& o, json& params, json& result, json& cert) {
  GradedSU G = need_su(o, params);
  params["a0"] = o.a0;
  params["maxDegree"] = o.max_degree;
  if (o.max_degree < 1) throw UsageError("--max-degree must be >= 1");
  ProlongationResult pr;
  std::string field = "real";
  int a0dim = 0;
  if (o.a0 == "lowest") {
    field = "complex";
    auto comp = hasse_weight2(G.n + 1).back();
    auto lw = lowest_weight_vectors(G, comp);
    CurvatureModule<Gaussian> M(G.complex);
    auto a0 = annihilator(M, lw.vectors.front());
    a0dim = static_cast<int>(a0.size());
    pr = tanaka_prolongation(G.complex, a0, o.max_degree);
    cert = {{"lowestWeightVector", sparse(lw.vectors.front())}, {"a0", sparse_list(a0)}};
  } else {
    std::vector<SparseVec<Rational>> a0;
    if (o.a0 == "full") {
      for (int i = 0; i < G.real.dim(0); ++i) a0.push_back({{i, Rational(1)}});
    } else if (o.a0 != "zero") {
      a0 = read_subspace(o.a0, G.real.dim(0));
    }
    a0dim = rank_of(a0, G.real.dim(0));
    pr = tanaka_prolongation(G.real, a0, o.max_degree);
    cert = {{"a0", sparse_list(a0)}};
  }
  result = {{"field", field}, {"a0Dim", a0dim}, {"dims", pr.dims}, {"realized", pr.realized}, {"truncated", pr.truncated}};
}

void cmd_invariants(const Options& o, json& params, json& result, json& cert) {
  if (o.check != "sp2") throw UsageError("--check must be sp2");
  need_n(o);
  params["check"] = o.check;
  params["n"] = o.n;
  if (o.n < 2 || o.n % 2 != 0) throw std::invalid_argument("the sp check needs an even n >= 2");
  const int m = o.n / 2;
  GradedSU G = graded_su(o.n + 1, 1);
  CurvatureModule<Rational> M(G.real);
  CMatrix om2 = conjugated_quaternionic_form(m);
  auto h1 = sp_embedding(m, G);
  auto h2 = sp_embedding(m, G, om2);
  int d1 = invariant_subspace(h1, M), d2 = invariant_subspace(h2, M);
  result = {{"field", "real"},
            {"moduleDim", M.dim()},
            {"generators", h1.size()},
            {"embeddings", json::array({{{"name", "standard"}, {"invariantDim", d1}},
                                        {{"name", "conjugated"}, {"invariantDim", d2}}})}};
  cert = {{"standard", sparse_list(h1)}, {"conjugated", sparse_list(h2)}, {"conjugatedOmega", matrix_str(om2)}};
}

void cmd_kostant(const Options& o, json& params, json& result, json& cert) {
  need_n(o);
  params["n"] = o.n;
  if (o.n < 2) throw std::invalid_argument("kostant needs n >= 2");
  const int l = o.n + 1;
  auto comps = hasse_weight2(l);
  json words = json::array();
  for (const auto& c : comps) {
    words.push_back({{"word", {c.word.first, c.word.second}},
                     {"marks", c.marks},
                     {"partner", {c.partner.first, c.partner.second}},
                     {"homogeneity", c.homogeneity}});
  }
  const auto& top = comps.back();
  GradedSU G = graded_su(1, o.n + 1);
  auto lw = lowest_weight_vectors(G, top);
  result = {{"rank", l},
            {"words", words},
            {"realComponents", real_component_count(comps)},
            {"lowestWeight",
             {{"component", {top.word.first, top.word.second}},
              {"weight", lw.weight},
              {"lines", lw.vectors.size()},
              {"real", lw.real},
              {"annihilatorDim", lw.annihilator_dim},
              {"field", "complex"}}},
            {"diagram", render_diagram(satake(0, o.n), top.marks)}};
  cert = {{"lowestWeightVector", sparse(lw.vectors.front())}};
}

void cmd_satake(const Options& o, json& params, json& result, json& cert) {
  need_n(o);
  if (o.k < 0) throw UsageError("--k is required");
  params["n"] = o.n;
  params["k"] = o.k;
  SatakeData s = satake(o.k, o.n);
  json pairs = json::array();
  for (auto [a, b] : s.arrow_pairs) pairs.push_back({a, b});
  result = {{"arrows", s.arrows}, {"black", s.black}, {"white", s.white}, {"crossed", s.crossed},
            {"arrowPairs", pairs}, {"diagram", render_diagram(s)}};
  cert = json::object();
}

void cmd_bounds(const Options& o, json& params, json& result, json& cert) {
  need_n(o);
  if (o.k < 0) throw UsageError("--k is required");
  params["n"] = o.n;
  params["k"] = o.k;
  BoundsTable b = bounds(o.n, o.k);
  result = {{"max", b.max_dim},
            {"submax", b.submax_dim},
            {"universal", b.universal_bound},
            {"stabilityGroup", b.stability_group},
            {"complexAnnihilatorBound", b.complex_annihilator_bound},
            {"definiteAnnihilatorBound", b.definite_annihilator_bound}};
  cert = json::object();
}

json make_report(const std::string& command, json params) {
  return {{"tool", kTool},
          {"version", kVersion},
          {"command", command},
          {"params", std::move(params)},
          {"status", "ok"},
          {"result", nullptr},
          {"certificate", nullptr},
          {"timingMs", 0}};
}

Outcome error_outcome(int code, const std::string& command, json params, const std::string& msg) {
  Outcome out;
  out.code = code;
  out.report = make_report(command, std::move(params));
  out.report["status"] = "error";
  out.report["result"] = {{"error", msg}, {"kind", code == 2 ? "usage" : "domain"}};
  out.report["certificate"] = json::object();
  return out;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact symmetry computations for rigid CR hypersurfaces", kTool};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto family = [&](CLI::App* s) {
    s->add_option("--family", o.family, "indefinite | definite | flat")
        ->check(CLI::IsMember({"indefinite", "definite", "flat"}));
  };
  auto n_opt = [&](CLI::App* s) { s->add_option("--n", o.n, "CR dimension")->check(CLI::Range(1, 12)); };
  auto eps = [&](CLI::App* s) { s->add_option("--eps", o.eps, "signs such as ++-"); };
  auto model = [&](CLI::App* s) { s->add_option("--model", o.model, "model file"); };
  auto pq = [&](CLI::App* s) {
    s->add_option("--p", o.p, "form signature p")->required()->check(CLI::Range(1, 12));
    s->add_option("--q", o.q, "form signature q")->required()->check(CLI::Range(1, 12));
  };

  CLI::App* verify = app.add_subcommand("verify", "tangency of catalog or file fields");
  family(verify);
  n_opt(verify);
  eps(verify);
  model(verify);
  verify->add_option("--fields", o.fields, "field file");
  CLI::App* solve = app.add_subcommand("solve", "polynomial symmetries up to a degree");
  family(solve);
  n_opt(solve);
  eps(solve);
  model(solve);
  solve->add_option("--degree", o.degree, "total degree")->required()->check(CLI::Range(0, 8));
  CLI::App* structure = app.add_subcommand("structure", "structure of a catalog algebra");
  family(structure);
  n_opt(structure);
  eps(structure);
  CLI::App* levi = app.add_subcommand("levi-form", "Levi form at the origin");
  family(levi);
  n_opt(levi);
  eps(levi);
  model(levi);
  CLI::App* parabolic = app.add_subcommand("parabolic", "graded su(p,q)");
  pq(parabolic);
  CLI::App* prolong = app.add_subcommand("prolong", "Tanaka prolongation");
  pq(prolong);
  prolong->add_option("--a0", o.a0, "full | zero | lowest | FILE");
  prolong->add_option("--max-degree", o.max_degree, "highest degree")->check(CLI::Range(1, 8));
  CLI::App* invariants = app.add_subcommand("invariants", "invariant vectors of a subalgebra");
  invariants->add_option("--check", o.check, "sp2")->required()->check(CLI::IsMember({"sp2"}));
  n_opt(invariants);
  CLI::App* kostant = app.add_subcommand("kostant", "weight-2 Hasse diagram and lowest weight");
  n_opt(kostant);
  CLI::App* sat = app.add_subcommand("satake", "Satake diagram of su(k+1, n-k+1)");
  n_opt(sat);
  sat->add_option("--k", o.k, "signature index")->required();
  CLI::App* bnd = app.add_subcommand("bounds", "maximal and submaximal dimensions");
  n_opt(bnd);
  bnd->add_option("--k", o.k, "signature index")->required();

  for (CLI::App* s : {verify, solve, levi}) {
    s->get_option("--family")->excludes(s->get_option("--model"));
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  std::string command;
  if (!args.empty()) command = args.front();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    return {0, nullptr, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, nullptr, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::CallForVersion&) {
    return {0, nullptr, std::string(kVersion) + "\n"};
  } catch (const CLI::ParseError& e) {
    return error_outcome(2, command, json::object(), e.what());
  }
  command = app.get_subcommands().front()->get_name();

  json params = json::object(), result, cert;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (command == "verify") cmd_verify(o, params, result, cert);
    else if (command == "solve") cmd_solve(o, params, result, cert);
    else if (command == "structure") cmd_structure(o, params, result, cert);
    else if (command == "levi-form") cmd_levi_form(o, params, result, cert);
    else if (command == "parabolic") cmd_parabolic(o, params, result, cert);
    else if (command == "prolong") cmd_prolong(o, params, result, cert);
    else if (command == "invariants") cmd_invariants(o, params, result, cert);
    else if (command == "kostant") cmd_kostant(o, params, result, cert);
    else if (command == "satake") cmd_satake(o, params, result, cert);
    else cmd_bounds(o, params, result, cert);
  } catch (const UsageError& e) {
    return error_outcome(2, command, params, e.what());
  } catch (const std::exception& e) {
    return error_outcome(1, command, params, e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  Outcome out;
  out.report = make_report(command, params);
  out.report["result"] = std::move(result);
  out.report["certificate"] = std::move(cert);
  out.report["timingMs"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return out;
}

}  // namespace crsym::cli
