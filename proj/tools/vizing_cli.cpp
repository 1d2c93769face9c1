// Command-line front end for the Vizing certificate pipeline.
#include <CLI11.hpp>

#include <iostream>

#include "vizing/certificate.hpp"
#include "vizing/groebner.hpp"
#include "vizing/ideal.hpp"
#include "vizing/json_io.hpp"

namespace {

using namespace viz;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoSolution = 3;

Rational parse_rational_flag(const std::string& s, const std::string& what) {
  if (auto r = Rational::parse(s)) return *r;
  try {
    size_t used = 0;
    const double d = std::stod(s, &used);
    if (used == s.size()) return Rational::from_double(d);
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(what, "expected a rational like 3/20 or a decimal");
}

void print_verdict(const Verdict& v, const std::string& heading) {
  std::cout << heading << "\n";
  for (const auto& c : v.checks)
    std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
              << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
}

int run_gb(int ng, int nh, bool oracle, bool as_json) {
  const ClassParams params(ng, nh);
  const auto basis = closed_form_gb(params);
  std::string oracle_result;
  if (oracle) {
    const auto computed = buchberger(build_generators(params));
    const auto expected = canonical_sort(basis);
    oracle_result = (computed == expected) ? "IDENTICAL" : "MISMATCH";
  }
  if (as_json) {
    json j;
    j["n_g"] = ng;
    j["n_h"] = nh;
    j["size"] = basis.size();
    j["basis"] = gb_to_json(basis);
    if (oracle) j["oracle"] = oracle_result;
    std::cout << dump_canonical(j);
  } else {
    std::cout << "reduced Groebner basis for n_g=" << ng << ", n_h=" << nh << " ("
              << basis.size() << " elements)\n";
    for (const auto& p : basis) std::cout << "  " << p.str() << "\n";
    if (oracle) std::cout << "Buchberger oracle: " << oracle_result << "\n";
  }
  return (!oracle || oracle_result == "IDENTICAL") ? kExitOk : kExitVerifyFail;
}

int run_generators(int ng, int nh, bool as_json) {
  const ClassParams params(ng, nh);
  const auto gens = build_generators(params);
  if (as_json) {
    json j;
    j["n_g"] = ng;
    j["n_h"] = nh;
    j["count"] = gens.size();
    j["generators"] = gb_to_json(gens);
    j["f_viz"] = gb_to_json({build_fviz(params)})[0];
    std::cout << dump_canonical(j);
  } else {
    std::cout << "ideal generators for n_g=" << ng << ", n_h=" << nh << " (" << gens.size()
              << ")\n";
    for (const auto& p : gens) std::cout << "  " << p.str() << "\n";
    std::cout << "f_viz = " << build_fviz(params).str() << "\n";
  }
  return kExitOk;
}

int run_find_cert(int d, const std::vector<std::string>& fixes, const std::string& margin_str,
                  int backtracks, bool as_json, const std::string& out_file) {
  SearchOptions opts;
  opts.max_backtracks = backtracks;
  if (!margin_str.empty()) opts.margin = parse_rational_flag(margin_str, "--margin");
  for (const auto& fx : fixes) {
    const auto eq = fx.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--fix", "expected F_i_j=p/q, got " + fx);
    opts.fixed[fx.substr(0, eq)] = parse_rational_flag(fx.substr(eq + 1), "--fix");
  }
  if (d > 14)
    std::cerr << "note: d > 14 is experimental; published results stop at d = 14\n";

  const SearchResult res = find_certificate(d, opts);
  if (const auto* fail = std::get_if<SearchFailure>(&res)) {
    std::cerr << (fail->kind == SearchFailure::Kind::UnsupportedD ? "unsupported d: "
                                                                  : "no solution found: ")
              << fail->detail << "\n";
    return fail->kind == SearchFailure::Kind::UnsupportedD ? kExitUsage : kExitNoSolution;
  }
  const Certificate& cert = std::get<Certificate>(res);
  const json j = certificate_to_json(cert);
  if (!out_file.empty()) write_json_file(out_file, j);
  if (as_json) {
    std::cout << dump_canonical(j);
  } else {
    std::cout << "certificate for d=" << cert.d << " (m=" << cert.m << ")\nF =\n";
    for (size_t i = 0; i < cert.F.rows(); ++i) {
      std::cout << "  [";
      for (size_t jj = 0; jj < cert.F.cols(); ++jj)
        std::cout << (jj ? ", " : " ") << cert.F.at(i, jj).str();
      std::cout << " ]\n";
    }
    for (const auto& p : cert.provenance) {
      std::cout << "  " << p.var << " = " << p.value.str() << " (" << p.source;
      if (p.interval)
        std::cout << ", interval [" << p.interval->first << ", " << p.interval->second
                  << "], margin " << p.margin.str();
      std::cout << ")\n";
    }
    std::cout << "  note: " << cert.anchor_note << "\n";
    if (!out_file.empty()) std::cout << "written to " << out_file << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& file, const std::vector<std::pair<int, int>>& brute,
               bool as_json) {
  const Certificate cert = certificate_from_json(read_json_file(file));
  const Verdict exact = verify_exact(cert);
  bool all = exact.all_pass();

  std::vector<std::pair<std::string, Verdict>> brute_verdicts;
  for (const auto& [ng, nh] : brute) {
    // A non-dominator anchor plus the dominator anchor exercise both shapes.
    for (const auto anchor : {std::pair<int, int>{ng, nh}, std::pair<int, int>{1, 1}}) {
      std::ostringstream name;
      name << "brute(" << ng << "," << nh << ") anchor(" << anchor.first << ","
           << anchor.second << ")";
      Verdict v = verify_bruteforce(cert, ng, nh, anchor);
      all = all && v.all_pass();
      brute_verdicts.emplace_back(name.str(), std::move(v));
    }
  }

  if (as_json) {
    json j;
    j["file"] = file;
    j["exact"] = verdict_to_json(exact);
    json b = json::array();
    for (const auto& [name, v] : brute_verdicts) {
      json e;
      e["name"] = name;
      e["verdict"] = verdict_to_json(v);
      b.push_back(std::move(e));
    }
    j["brute"] = std::move(b);
    j["all_pass"] = all;
    std::cout << dump_canonical(j);
  } else {
    print_verdict(exact, "exact verification (zero tolerance)");
    for (const auto& [name, v] : brute_verdicts) print_verdict(v, name);
    std::cout << (all ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << "\n";
  }
  return all ? kExitOk : kExitVerifyFail;
}

int run_brute_check(const std::string& file, int ng, int nh,
                    const std::vector<int>& anchor, bool as_json) {
  const Certificate cert = certificate_from_json(read_json_file(file));
  std::optional<std::pair<int, int>> anch;
  if (anchor.size() == 2) anch = std::make_pair(anchor[0], anchor[1]);
  const Verdict v = verify_bruteforce(cert, ng, nh, anch);
  if (as_json) {
    json j;
    j["file"] = file;
    j["n_g"] = ng;
    j["n_h"] = nh;
    j["verdict"] = verdict_to_json(v);
    std::cout << dump_canonical(j);
  } else {
    std::ostringstream head;
    head << "brute-force check on (" << ng << "," << nh << ")";
    print_verdict(v, head.str());
  }
  return v.all_pass() ? kExitOk : kExitVerifyFail;
}

int run_sdp_pipeline(int ng, int nh, int ell, bool as_json) {
  const SdpProblem p = full_sdp_pipeline(ng, nh, ell);
  const FeasibilityResult fr = feasibility(p);
  const std::string verdict = fr.feasible ? "Feasible" : "LikelyInfeasible";
  if (as_json) {
    json j;
    j["n_g"] = ng;
    j["n_h"] = nh;
    j["ell"] = ell;
    j["monomials"] = p.n;
    j["constraints"] = p.A.size();
    j["verdict"] = verdict;
    j["infeas_measure"] = fr.infeas_measure;
    j["tier"] = "numerical evidence";
    std::cout << dump_canonical(j);
  } else {
    std::cout << "degree-" << ell << " SOS feasibility for n_g=" << ng << ", n_h=" << nh
              << ": " << verdict << " [numerical evidence] (" << p.n
              << " monomials, " << p.A.size() << " constraints, measure "
              << fr.infeas_measure << ")\n";
  }
  return kExitOk;
}

int run_structure_check(int from, int to, bool as_json) {
  const StructureReport rep = check_structure_identities(from, to);
  if (as_json) {
    json j;
    json entries = json::array();
    for (const auto& e : rep.entries) {
      json je;
      je["d"] = e.d;
      je["even"] = e.even;
      je["exact_ok"] = e.exact_ok;
      je["exact_detail"] = e.exact_detail;
      if (e.f11_pin_likely_infeasible) {
        je["f11_dminus1_likely_infeasible"] = *e.f11_pin_likely_infeasible;
        je["infeas_measure"] = e.infeas_measure;
        je["tier"] = "numerical evidence";
      }
      entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["exact_all_ok"] = rep.exact_all_ok;
    j["numeric_all_ok"] = rep.numeric_all_ok;
    std::cout << dump_canonical(j);
  } else {
    for (const auto& e : rep.entries) {
      std::cout << "d=" << e.d << (e.even ? " (even)" : " (odd) ") << " exact: "
                << (e.exact_ok ? "OK" : "FAIL") << " - " << e.exact_detail << "\n";
      if (e.f11_pin_likely_infeasible)
        std::cout << "      F_11 = d-1 pin: "
                  << (*e.f11_pin_likely_infeasible ? "LikelyInfeasible" : "Feasible")
                  << " [numerical evidence] (measure " << e.infeas_measure << ")\n";
    }
  }
  return (rep.exact_all_ok && rep.numeric_all_ok) ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sum-of-squares certificates for product-graph domination, k = 1"};
  app.require_subcommand(1);

  int ng = 2, nh = 2, d = 5, ell = 1, from = 3, to = 14, backtracks = 8;
  bool oracle = false, as_json = false;
  std::vector<std::string> fixes;
  std::string margin_str, out_file, file;
  std::vector<std::pair<int, int>> brute;
  std::vector<int> anchor;

  auto* gb = app.add_subcommand("gb", "closed-form reduced Groebner basis");
  gb->add_option("--ng", ng, "vertices of the first factor")->required();
  gb->add_option("--nh", nh, "vertices of the second factor")->required();
  gb->add_flag("--oracle", oracle, "compare against Buchberger on the raw generators");
  gb->add_flag("--json", as_json);

  auto* gen = app.add_subcommand("generators", "ideal generators");
  gen->add_option("--ng", ng)->required();
  gen->add_option("--nh", nh)->required();
  gen->add_flag("--json", as_json);

  auto* fc = app.add_subcommand("find-cert", "search for an exact certificate");
  fc->add_option("--d", d, "cross size n_g + n_h - 1")->required();
  fc->add_option("--fix", fixes, "pin an entry, e.g. F_1_1=6 (repeatable)");
  fc->add_option("--margin", margin_str, "interval shrink fraction (default 1/20)");
  fc->add_option("--backtracks", backtracks, "re-round budget on exact-PSD failure (default 8)");
  fc->add_option("--out", out_file, "write certificate JSON to a file");
  fc->add_flag("--json", as_json);

  auto* ver = app.add_subcommand("verify", "verify a certificate file");
  ver->add_option("--file", file)->required()->check(CLI::ExistingFile);
  ver->add_option("--brute", brute,
                  "also brute-force a class split NG NH (repeatable)");
  ver->add_flag("--json", as_json);

  auto* bc = app.add_subcommand("brute-check", "brute-force variety check only");
  bc->add_option("--file", file)->required()->check(CLI::ExistingFile);
  bc->add_option("--ng", ng)->required();
  bc->add_option("--nh", nh)->required();
  bc->add_option("--anchor", anchor, "anchor vertex G H")->expected(2);
  bc->add_flag("--json", as_json);

  auto* sp = app.add_subcommand("sdp-pipeline", "degree-ell SOS feasibility (desk scale)");
  sp->add_option("--ng", ng)->required();
  sp->add_option("--nh", nh)->required();
  sp->add_option("--ell", ell)->required();
  sp->add_flag("--json", as_json);

  auto* sc = app.add_subcommand("structure-check", "cross-d structural identities");
  sc->add_option("--from", from)->required();
  sc->add_option("--to", to)->required();
  sc->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gb->parsed()) return run_gb(ng, nh, oracle, as_json);
    if (gen->parsed()) return run_generators(ng, nh, as_json);
    if (fc->parsed()) return run_find_cert(d, fixes, margin_str, backtracks, as_json, out_file);
    if (ver->parsed()) return run_verify(file, brute, as_json);
    if (bc->parsed()) return run_brute_check(file, ng, nh, anchor, as_json);
    if (sp->parsed()) return run_sdp_pipeline(ng, nh, ell, as_json);
    if (sc->parsed()) return run_structure_check(from, to, as_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const viz::CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
