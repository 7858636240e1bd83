#include "plcurve/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "plcurve/algebra/parser.hpp"
#include "plcurve/derham.hpp"
#include "plcurve/error.hpp"
#include "plcurve/families.hpp"

namespace plc::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kNeedsComponents = "needs --components";
constexpr const char* kNeedsLocus = "needs a complete singular locus";

Json cyclo_json(const CycloPoly& p) {
  Json factors = Json::array();
  for (const auto& [n, m] : p.factors()) factors.push_back({{"n", n}, {"mult", m}});
  Json coeffs = Json::array();
  for (const auto& c : p.expand()) coeffs.push_back(c.get_str());
  return {{"factored", to_string(p)}, {"factors", factors}, {"coefficients", coeffs}};
}

Json spectrum_json(const SpectrumMultiset& sp) {
  Json out = Json::array();
  for (const auto& e : sp.entries()) out.push_back({{"alpha", to_string(e.alpha)}, {"mult", e.mult}});
  return out;
}

Json syzygy_json(const Syzygy& s) {
  Json out;
  out["degree"] = s.degree();
  out["triple"] = Json::array({to_string(s.a()), to_string(s.b()), to_string(s.c())});
  return out;
}

Json curve_report(const std::string& input, const HomPoly& f, std::optional<int> comps) {
  const Curve curve(f);
  const int d = curve.degree();
  Json rep;
  rep["schema_version"] = kSchemaVersion;
  rep["report"] = "curve";
  rep["input"] = input;
  rep["polynomial"] = to_string(f);
  rep["degree"] = d;

  const int r = mdr(curve);
  const std::size_t tau = tjurina_total(curve);
  const Classification cls = classify(curve, r, tau);
  rep["mdr"] = r;
  rep["tau"] = tau;
  rep["classification"] = {{"kind", to_string(cls.kind)},
                           {"exponents", cls.d1 ? Json::array({*cls.d1, *cls.d2}) : Json(nullptr)}};

  SingularLocus locus = singular_points(curve);
  Json pts = Json::array();
  long mu_sum = 0;
  for (auto& p : locus.points) {
    p.milnor = milnor_local(curve, p.coords);
    mu_sum += *p.milnor;
    pts.push_back({{"point", to_string(p.coords)}, {"milnor", *p.milnor}});
  }
  rep["singular_points"] = pts;
  rep["singular_locus_complete"] = locus.complete;
  if (!locus.complete) rep["unresolved"] = locus.unresolved;
  std::optional<long> mu;
  if (locus.complete) mu = mu_sum;
  rep["mu"] = mu ? Json(*mu) : Json(kNeedsLocus);

  Json certs = Json::object();
  if (cls.kind == ClassKind::Free) {
    const auto cert = free_certificate(curve);
    certs["free"] = {{"rho1", syzygy_json(cert->rho1)},
                     {"rho2", syzygy_json(cert->rho2)},
                     {"scale", to_string(cert->scale)}};
  }
  rep["certificates"] = certs;

  std::vector<long> njs;
  for (int j = 1; j <= d - 3; ++j) njs.push_back(static_cast<long>(nj(curve, j)));
  rep["nj"] = njs;

  if (!mu) {
    rep["chi"] = kNeedsLocus;
  } else {
    rep["chi"] = chi_complement(d, *mu);
  }
  rep["components"] = comps ? Json(*comps) : Json(nullptr);
  if (!comps || !mu) {
    const char* why = !comps ? kNeedsComponents : kNeedsLocus;
    for (const char* key : {"betti", "spectrum", "alexander", "delta2", "milnor_fiber_betti"}) rep[key] = why;
    return rep;
  }
  const ComplementData cd = complement_data(d, *mu, *comps);
  rep["betti"] = {{"b0", cd.b0}, {"b1", cd.b1}, {"b2", cd.b2}};
  const SpectrumMultiset sp = spectrum(njs, d, cd.b1);
  rep["spectrum"] = spectrum_json(sp);
  const CycloPoly alex = alexander(eigenvalue_table(sp, d));
  rep["alexander"] = cyclo_json(alex);
  rep["delta2"] = cyclo_json(delta2(alex, cd.chi, d));
  const auto [b1F, b2F] = milnor_fiber_betti(alex, cd.chi, d);
  rep["milnor_fiber_betti"] = {{"b1", b1F}, {"b2", b2F}};
  return rep;
}

Json verification_json(const VerificationReport& v) {
  Json claims = Json::array();
  for (const auto& c : v.claims) {
    claims.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"status", c.pass ? "PASS" : "FAIL"}});
  }
  Json info = Json::array();
  for (const auto& [k, val] : v.info) info.push_back({{"name", k}, {"value", val}});
  return {{"schema_version", kSchemaVersion},
          {"report", "verification"},
          {"family", to_string(v.kind)},
          {"degree", v.d},
          {"status", v.passed() ? "PASS" : "FAIL"},
          {"claims", claims},
          {"info", info}};
}

std::string lambda_text(int k, int d) {
  return "exp(-" + std::to_string(2 * k) + " pi i/" + std::to_string(d) + ")";
}

std::string empty_forms_note(FamilyKind kind, int d, int k) {
  if (kind == FamilyKind::Cprime && d % 2 == 1) {
    return "n_" + std::to_string(k - 2) + " = 0: no eigenforms for odd-degree Cprime";
  }
  return "no multipliers in degree " + std::to_string(k - 3);
}

// Flattens nested objects into "a.b: value" lines.
void write_text(std::ostream& out, const Json& j, const std::string& prefix) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object() && !it->empty()) {
      write_text(out, *it, key);
    } else if (it->is_string()) {
      out << key << ": " << it->get<std::string>() << "\n";
    } else {
      out << key << ": " << it->dump() << "\n";
    }
  }
}

void add_timing(Json& rep, bool timing, std::chrono::steady_clock::time_point t0) {
  if (!timing) return;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  rep["timing"] = {{"elapsed_ms", ms}};
}

void report_error(std::ostream& err, const Error& e, const std::string& input) {
  err << "error: " << e.what() << "\n";
  if (e.position() && !input.empty()) {
    err << "  " << input << "\n  " << std::string(*e.position(), ' ') << "^\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobian syzygies, freeness and Milnor fiber invariants of plane curves"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add elapsed time to JSON reports");
  app.fallthrough();

  std::string poly;
  std::optional<int> comps;
  bool json = false;
  bool text = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze a reduced plane curve");
  analyze->add_option("--poly", poly, "Homogeneous polynomial in x, y, z")->required();
  analyze->add_option("--components", comps, "Number of irreducible components over C")
      ->check(CLI::PositiveNumber);
  auto* aj = analyze->add_flag("--json", json, "JSON output");
  analyze->add_flag("--text", text, "Text output (default)")->excludes(aj);

  std::string kind_name;
  int degree = 0;
  bool verify_flag = false;
  bool report_flag = false;
  bool fjson = false;
  auto* family = app.add_subcommand("family", "Verify or report one member of a family");
  family->add_option("--kind", kind_name, "C, Cprime or Cdoubleprime")->required();
  family->add_option("--degree", degree, "Degree d >= 3")->required();
  auto* fv = family->add_flag("--verify", verify_flag, "Run the verification harness (default)");
  family->add_flag("--report", report_flag, "Emit the computed curve report")->excludes(fv);
  family->add_flag("--json", fjson, "JSON output");

  int k = 0;
  std::string format = "latex";
  auto* forms = app.add_subcommand("forms", "Eigenforms for one eigenvalue");
  forms->add_option("--kind", kind_name, "C, Cprime or Cdoubleprime")->required();
  forms->add_option("--degree", degree, "Degree d >= 3")->required();
  forms->add_option("--k", k, "Eigenvalue index, 3 <= k <= d-1")->required();
  forms->add_option("--format", format, "json or latex")->check(CLI::IsMember({"json", "latex"}));

  int max_degree = 0;
  bool sjson = false;
  auto* suite = app.add_subcommand("suite", "Verify all three families up to a degree");
  suite->add_option("--max-degree", max_degree, "Largest degree")->required();
  suite->add_flag("--json", sjson, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kInputError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (analyze->parsed()) {
      Json rep = curve_report(poly, parse_poly(poly), comps);
      add_timing(rep, timing, t0);
      if (json) {
        out << rep.dump(2) << "\n";
      } else {
        write_text(out, rep, "");
      }
      return kOk;
    }
    if (family->parsed()) {
      const FamilyKind kind = parse_family_kind(kind_name);
      if (report_flag) {
        const HomPoly f = generate(kind, degree);
        Json rep = curve_report(to_string(f), f, components(kind, degree));
        rep["family"] = to_string(kind);
        add_timing(rep, timing, t0);
        if (fjson) {
          out << rep.dump(2) << "\n";
        } else {
          write_text(out, rep, "");
        }
        return kOk;
      }
      if (degree < 3) throw Error(ErrorKind::BadDegree, "family degree must be at least 3");
      const VerificationReport v = verify(kind, degree);
      if (fjson) {
        Json rep = verification_json(v);
        add_timing(rep, timing, t0);
        out << rep.dump(2) << "\n";
      } else {
        out << to_table(v);
      }
      return v.passed() ? kOk : kVerificationFailed;
    }
    if (forms->parsed()) {
      const FamilyKind kind = parse_family_kind(kind_name);
      const auto list = eigenbasis(kind, degree, k);
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& ef : list) {
          arr.push_back({{"P", to_string(ef.form.P())},
                         {"Q", to_string(ef.form.Q())},
                         {"R", to_string(ef.form.R())},
                         {"lambda", {{"k", ef.k}, {"d", ef.d}}},
                         {"h", to_string(ef.h)},
                         {"latex", to_latex(ef.form)},
                         {"restricted", ef.restricted}});
        }
        Json rep = {{"schema_version", kSchemaVersion},
                    {"report", "forms"},
                    {"family", to_string(kind)},
                    {"degree", degree},
                    {"k", k},
                    {"lambda", {{"k", k}, {"d", degree}}},
                    {"count", list.size()},
                    {"forms", arr}};
        if (list.empty()) rep["note"] = empty_forms_note(kind, degree, k);
        add_timing(rep, timing, t0);
        out << rep.dump(2) << "\n";
      } else {
        out << "% lambda = " << lambda_text(k, degree) << ", " << list.size() << " form(s)\n";
        if (list.empty()) out << "% " << empty_forms_note(kind, degree, k) << "\n";
        for (const auto& ef : list) out << to_latex(ef.form) << "\n";
      }
      return kOk;
    }
    if (suite->parsed()) {
      if (max_degree < 3) throw Error(ErrorKind::BadDegree, "--max-degree must be at least 3");
      Json runs = Json::array();
      bool all = true;
      for (FamilyKind kind : {FamilyKind::C, FamilyKind::Cprime, FamilyKind::Cdoubleprime}) {
        for (int d = 3; d <= max_degree; ++d) {
          const VerificationReport v = verify(kind, d);
          all = all && v.passed();
          Json failed = Json::array();
          for (const auto& c : v.claims) {
            if (!c.pass) failed.push_back(c.name);
          }
          runs.push_back({{"family", to_string(kind)},
                          {"degree", d},
                          {"status", v.passed() ? "PASS" : "FAIL"},
                          {"failed_claims", failed}});
          if (!sjson) {
            out << (v.passed() ? "PASS " : "FAIL ") << to_string(kind) << " d=" << d;
            for (const auto& name : failed) out << " [" << name.get<std::string>() << "]";
            out << "\n";
          }
        }
      }
      if (sjson) {
        Json rep = {{"schema_version", kSchemaVersion},
                    {"report", "suite"},
                    {"max_degree", max_degree},
                    {"status", all ? "PASS" : "FAIL"},
                    {"runs", runs}};
        add_timing(rep, timing, t0);
        out << rep.dump(2) << "\n";
      } else {
        out << (all ? "suite PASS" : "suite FAIL") << "\n";
      }
      return all ? kOk : kVerificationFailed;
    }
  } catch (const Error& e) {
    report_error(err, e, analyze->parsed() ? poly : std::string());
    return is_input_error(e.kind()) ? kInputError : kInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

}  // namespace plc::cli
