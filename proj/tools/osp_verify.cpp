#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "osp/verify.hpp"

using namespace osp;
using namespace osp::verify;
using nlohmann::ordered_json;

namespace {

ordered_json to_json(const CheckRecord& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["check"] = r.name;
  j["anchor"] = r.anchor;
  j["status"] = status_name(r.status);
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  j["seconds"] = r.seconds;
  return j;
}

std::string to_text(const std::vector<CheckRecord>& rs) {
  std::string out;
  char buf[64];
  for (const auto& r : rs) {
    std::snprintf(buf, sizeof buf, "%-5s %8.3fs  ", status_name(r.status), r.seconds);
    out += buf + r.suite + "/" + r.name;
    if (!r.witness.empty()) out += "\n      " + r.witness;
    if (!r.detail.empty()) out += "\n      " + r.detail;
    out += "\n";
  }
  return out;
}

ordered_json structure_constants(const TkkAlgebra& g) {
  ordered_json j;
  j["labels"] = ordered_json::array();
  for (int a = 0; a < g.dim(); ++a) j["labels"].push_back(g.label(a));
  j["parity"] = ordered_json::array();
  for (int a = 0; a < g.dim(); ++a) j["parity"].push_back(g.parity(a));
  j["brackets"] = ordered_json::array();
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) {
      const auto& sv = g.structure(a, b);
      if (sv.empty()) continue;
      ordered_json e;
      e["x"] = g.label(a);
      e["y"] = g.label(b);
      for (const auto& [c, v] : sv) e["result"][g.label(c)] = v.to_string();
      j["brackets"].push_back(e);
    }
  return j;
}

ordered_json gram_json(const SigPtr& z, int K) {
  ordered_json j = ordered_json::array();
  for (int k = 0; k <= K; ++k) {
    auto basis = fock_basis(*z, k);
    CMatrix G = gram(z, k);
    ordered_json e;
    e["degree"] = k;
    for (const auto& mo : basis) e["basis"].push_back(SuperPolynomial::monomial(z, mo).to_string());
    e["rank"] = G.rank();
    for (size_t r = 0; r < G.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (size_t c = 0; c < G.cols(); ++c) row.push_back(G(r, c).to_string());
      e["matrix"].push_back(row);
    }
    j.push_back(e);
  }
  return j;
}

ordered_json integral_trace(const WIntegral& W, int K) {
  ordered_json j = ordered_json::array();
  auto s = W.sig();
  for (const auto& mo : monomials_up_to(*s, K)) {
    std::vector<IntegralTrace> trace;
    PiScalar v = W.unnormalized(ExpPoly(4, SuperPolynomial::monomial(s, mo)), &trace);
    ordered_json e;
    e["integrand"] = SuperPolynomial::monomial(s, mo).to_string() + "*exp(-4*x0)";
    e["value"] = v.to_string();
    for (const auto& t : trace)
      e["terms"].push_back({{"term", t.term}, {"N", t.N}, {"rate", t.rate.get_str()}, {"sphere", t.sphere},
                            {"berezin", t.berezin}, {"contribution", t.contribution}});
    j.push_back(e);
  }
  return j;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Schrodinger and Fock models of osp(m,2|2n)"};
  RunConfig cfg;
  std::string out, format = "json", exp;
  app.add_option("--m", cfg.m, "even dimension m (>= 2)")->capture_default_str();
  app.add_option("--n", cfg.n, "half the odd dimension")->capture_default_str();
  app.add_option("--max-degree", cfg.max_degree, "degree cap for the checks")->capture_default_str();
  app.add_option("--suite", cfg.suites, "suites to run (default all)")
      ->check(CLI::IsMember(suite_names()))
      ->take_all();
  app.add_option("--seed", cfg.seed, "seed for random polynomials")->capture_default_str();
  app.add_option("--out", out, "report path (default standard output)");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--export", exp, "write data instead of running checks")
      ->check(CLI::IsMember({"structure-constants", "gram", "integral-trace", "specfun-csv"}));
  CLI11_PARSE(app, argc, argv);

  try {
    cfg.validate();
    if (!exp.empty()) {
      if (exp == "structure-constants")
        emit(out, structure_constants(TkkAlgebra(Signature::standard(cfg.m, cfg.n))).dump(2) + "\n");
      else if (exp == "gram")
        emit(out, gram_json(Signature::standard(cfg.m, cfg.n, VarSet::Z), cfg.max_degree).dump(2) + "\n");
      else if (exp == "integral-trace")
        emit(out, integral_trace(WIntegral(cfg.m, cfg.n), cfg.max_degree).dump(2) + "\n");
      else
        emit(out, specfun_csv(cfg.M()));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto ctx = std::make_shared<Context>(cfg);
  std::vector<CheckRecord> records;
  for (const auto& c : build_checks(ctx)) records.push_back(execute(c));

  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : records) (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : skip)++;

  std::string report;
  if (format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& r : records) j.push_back(to_json(r));
    report = j.dump(2) + "\n";
  } else {
    report = to_text(records);
  }
  if (!out.empty() && out != "-") {
    emit(out, report);
    std::cout << to_text(records);
  } else {
    std::cout << report;
  }
  bool to_file = !out.empty() && out != "-";
  if (cfg.wants("specfun") && !cfg.suites.empty() && (to_file || format == "text")) std::cout << "\n" << specfun_csv(cfg.M());
  std::cerr << "(m,n) = (" << cfg.m << "," << cfg.n << "), M = " << cfg.M() << ": " << pass << " passed, " << fail
            << " failed, " << skip << " skipped\n";
  return fail ? 1 : 0;
}
