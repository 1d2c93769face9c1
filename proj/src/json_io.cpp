#include "vizing/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace viz {

namespace {

json rat(const Rational& r) { return r.str(); }

Rational parse_rat(const json& j, const char* what) {
  if (!j.is_string()) throw std::runtime_error(std::string("expected rational string for ") + what);
  const auto r = Rational::parse(j.get<std::string>());
  if (!r) throw std::runtime_error(std::string("malformed rational for ") + what);
  return *r;
}

json matrix_to_json(const RatMatrix& M) {
  json rows = json::array();
  for (size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < M.cols(); ++j) row.push_back(rat(M.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw std::runtime_error(std::string("bad matrix ") + what);
  const size_t rows = j.size(), cols = j[0].size();
  RatMatrix M(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw std::runtime_error(std::string("ragged matrix ") + what);
    for (size_t c = 0; c < cols; ++c) M.at(i, c) = parse_rat(j[i][c], what);
  }
  return M;
}

}  // namespace

json certificate_to_json(const Certificate& c) {
  json j;
  j["d"] = c.d;
  j["m"] = c.m;
  j["F"] = matrix_to_json(c.F);
  json ldl;
  ldl["perm"] = c.ldl.perm;
  ldl["L"] = matrix_to_json(c.ldl.L);
  json dd = json::array();
  for (const auto& d : c.ldl.D) dd.push_back(rat(d));
  ldl["D"] = std::move(dd);
  j["ldl"] = std::move(ldl);
  if (c.rows) {
    json rows = json::array();
    for (const auto& r : *c.rows) {
      json row;
      row["radicand"] = rat(r.radicand);
      json coeffs = json::array();
      for (const auto& x : r.coeffs) coeffs.push_back(rat(x));
      row["coeffs"] = std::move(coeffs);
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
  } else {
    j["rows"] = nullptr;
  }
  json prov = json::array();
  for (const auto& p : c.provenance) {
    json e;
    e["var"] = p.var;
    e["value"] = rat(p.value);
    if (p.interval)
      e["interval"] = json::array({p.interval->first, p.interval->second});
    else
      e["interval"] = nullptr;
    e["margin"] = rat(p.margin);
    e["source"] = p.source;
    prov.push_back(std::move(e));
  }
  j["provenance"] = std::move(prov);
  j["anchor_note"] = c.anchor_note;
  j["version"] = 1;
  return j;
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw std::runtime_error("certificate: not an object");
  if (!j.contains("version") || j["version"] != 1)
    throw std::runtime_error("certificate: unsupported version");
  Certificate c;
  c.d = j.at("d").get<int>();
  c.m = j.at("m").get<int>();
  c.F = matrix_from_json(j.at("F"), "F");
  const json& ldl = j.at("ldl");
  c.ldl.perm = ldl.at("perm").get<std::vector<size_t>>();
  c.ldl.L = matrix_from_json(ldl.at("L"), "ldl.L");
  for (const auto& d : ldl.at("D")) c.ldl.D.push_back(parse_rat(d, "ldl.D"));
  if (j.contains("rows") && !j["rows"].is_null()) {
    std::vector<RadicalRow> rows;
    for (const auto& r : j["rows"]) {
      RadicalRow row;
      row.radicand = parse_rat(r.at("radicand"), "rows.radicand");
      for (const auto& x : r.at("coeffs")) row.coeffs.push_back(parse_rat(x, "rows.coeffs"));
      rows.push_back(std::move(row));
    }
    c.rows = std::move(rows);
  }
  if (j.contains("provenance")) {
    for (const auto& e : j["provenance"]) {
      ProvenanceEntry p;
      p.var = e.at("var").get<std::string>();
      p.value = parse_rat(e.at("value"), "provenance.value");
      if (e.contains("interval") && !e["interval"].is_null())
        p.interval = std::make_pair(e["interval"][0].get<double>(), e["interval"][1].get<double>());
      p.margin = parse_rat(e.at("margin"), "provenance.margin");
      p.source = e.at("source").get<std::string>();
      c.provenance.push_back(std::move(p));
    }
  }
  if (j.contains("anchor_note")) c.anchor_note = j["anchor_note"].get<std::string>();
  return c;
}

json fsystem_to_json(const FSystem& fs) {
  json j;
  j["d"] = fs.d;
  json eqs = json::array();
  for (const auto& e : fs.equations) {
    json eq;
    eq["k"] = e.k;
    eq["lhs_sign"] = e.lhs_sign;
    json terms = json::array();
    for (const auto& t : e.terms) {
      json term;
      term["i"] = t.i;
      term["j"] = t.j;
      term["coeff"] = t.coeff;
      terms.push_back(std::move(term));
    }
    eq["terms"] = std::move(terms);
    eqs.push_back(std::move(eq));
  }
  j["equations"] = std::move(eqs);
  return j;
}

json gb_to_json(const std::vector<Polynomial>& basis) {
  json arr = json::array();
  for (const auto& p : basis) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
      json t;
      t["coeff"] = rat(c);
      json mono = json::array();
      for (const auto& [v, e] : m.factors()) mono.push_back(json::array({v.str(), e}));
      t["monomial"] = std::move(mono);
      terms.push_back(std::move(t));
    }
    arr.push_back(std::move(terms));
  }
  return arr;
}

json verdict_to_json(const Verdict& v) {
  json j;
  json checks = json::array();
  for (const auto& c : v.checks) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = v.all_pass();
  return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << dump_canonical(j);
}

json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  return json::parse(f);
}

}  // namespace viz
