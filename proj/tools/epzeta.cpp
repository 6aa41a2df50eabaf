// Command line front end: growth series, Euler characteristics, double coset
// zeta functions, Hecke computations, and the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "epzeta/io.hpp"
#include "epzeta/verify.hpp"
#include "epzeta/zeta.hpp"

namespace {

using epzeta::BigInt;
using epzeta::BigRational;
using epzeta::CheckResult;
using epzeta::CoxeterSystem;
using epzeta::GeneratorSet;
using epzeta::HaarMeasure;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFailure = 2;

struct Output {
  bool as_json = false;
  json j;
  std::ostringstream text;

  explicit Output(const std::string& command) {
    j["command"] = command;
    j["inputs"] = json::object();
    j["result"] = json::object();
    j["identity_checks"] = json::array();
    text << "command: " << command << '\n';
  }

  void input(const std::string& key, const std::string& value) {
    j["inputs"][key] = value;
    text << key << ": " << value << '\n';
  }

  void result_line(const std::string& key, const std::string& value) {
    j["result"][key] = value;
    text << key << ": " << value << '\n';
  }

  void block(const std::string& key, const std::string& body) {
    j["result"][key] = body;
    text << key << ":\n" << body;
  }

  void identity(const std::string& name, bool ok, const std::string& detail) {
    json entry;
    entry["identity"] = name;
    entry["ok"] = ok;
    if (!ok) entry["detail"] = detail;
    j["identity_checks"].push_back(entry);
    text << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !detail.empty()) text << ": " << detail;
    text << '\n';
  }

  void flush() const {
    if (as_json)
      std::cout << j.dump(2) << '\n';
    else
      std::cout << text.str();
  }
};

CoxeterSystem load_coxeter(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw epzeta::Error("cannot open file '" + path + "'");
  return CoxeterSystem::parse(in, path);
}

BigInt parse_bigint(const std::string& text, const std::string& flag) {
  try {
    return BigInt(text);
  } catch (const std::invalid_argument&) {
    throw epzeta::Error("flag " + flag + ": expected an integer, got '" + text + "'");
  }
}

GeneratorSet parse_subset(const std::string& csv, int rank) {
  GeneratorSet out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    int v = 0;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw epzeta::Error("--parabolic expects 1-based indices, got '" + tok + "'");
    }
    if (v < 1 || v > rank)
      throw epzeta::Error("generator index " + tok + " out of range 1.." +
                          std::to_string(rank));
    out.push_back(v - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run_growth(const std::string& file, int max_len, bool exact, Output& out) {
  const CoxeterSystem sys = load_coxeter(file);
  out.input("coxeter", file);
  out.input("max-len", std::to_string(max_len));
  const auto counts = sys.counts_by_length(max_len);
  std::ostringstream counts_text;
  for (std::size_t k = 0; k < counts.size(); ++k)
    counts_text << k << ' ' << counts[k] << '\n';
  out.block("counts (length count)", counts_text.str());
  if (const auto desc = sys.classify_finite())
    out.result_line("finite type", desc->str());
  else
    out.result_line("finite type", "infinite");
  if (exact) {
    const auto gamma = sys.growth_series();
    out.result_line("growth rational form (num | den)", gamma.str());
    const auto expansion = gamma.expand(max_len);
    bool ok = true;
    for (int k = 0; k <= max_len; ++k)
      if (expansion.coefficient(k) !=
          BigRational(static_cast<long>(counts[static_cast<std::size_t>(k)])))
        ok = false;
    out.identity("growth series expansion = enumeration to order " +
                     std::to_string(max_len),
                 ok, expansion.str());
    if (!ok) return kExitVerifyFailure;
  }
  return kExitOk;
}

int run_euler_building(const std::string& file, const std::string& q_text, Output& out) {
  const CoxeterSystem sys = load_coxeter(file);
  const BigInt q = parse_bigint(q_text, "-q");
  out.input("coxeter", file);
  out.input("q", q.get_str());
  out.result_line("chi", epzeta::euler_building(sys, q).str());
  return kExitOk;
}

int run_euler_gog(const std::string& file, const std::string& base, Output& out) {
  std::ifstream in(file);
  if (!in) throw epzeta::Error("cannot open file '" + file + "'");
  const auto g = epzeta::parse_graph_of_groups(in, file);
  out.input("graph", file);
  const auto res = epzeta::euler_graph_of_groups(
      g, base.empty() ? std::nullopt : std::optional<std::string>(base));
  out.result_line("chi", res.chi.str());
  if (!res.base_note.empty()) out.result_line("note", res.base_note);
  const auto cert = epzeta::check_nonpositive(g);
  out.result_line("nonpositive", cert.nonpositive ? "yes" : "no");
  if (!cert.applicable) out.result_line("nonpositivity note", cert.note);
  for (const auto& line : cert.edge_inequalities)
    out.identity(line, true, "");
  return kExitOk;
}

int run_euler_chevalley(const std::string& type, int rank,
                        const std::string& q_text, Output& out) {
  const BigInt q = parse_bigint(q_text, "-q");
  out.input("type", type);
  out.input("rank", std::to_string(rank));
  out.input("q", q.get_str());
  out.result_line("chi", epzeta::euler_chevalley({type, rank, q}).str());
  return kExitOk;
}

int run_euler_complex(const std::string& file, const std::string& ctx_file,
                      std::string base, Output& out) {
  std::ifstream in(file);
  if (!in) throw epzeta::Error("cannot open file '" + file + "'");
  const auto data = epzeta::parse_orbit_complex(in, file);
  out.input("complex", file);
  epzeta::SubgroupContext ctx;
  if (!ctx_file.empty()) {
    std::ifstream cin_(ctx_file);
    if (!cin_) throw epzeta::Error("cannot open file '" + ctx_file + "'");
    ctx = epzeta::SubgroupContext::parse(cin_, ctx_file);
    out.input("ctx", ctx_file);
  }
  if (base.empty()) {
    for (const auto& level : data.orbits) {
      if (!level.empty()) {
        base = level.front();
        break;
      }
    }
  }
  if (base.empty()) throw epzeta::Error("no orbits, no base to report in");
  out.input("base", base);
  out.result_line("chi", epzeta::euler_from_orbits(data, ctx, base).str());
  return kExitOk;
}

int run_euler_lattice(const std::string& chi, const std::string& covol,
                      const std::string& base, Output& out) {
  out.input("chi_Gamma", chi);
  out.input("covolume", covol);
  const auto m = epzeta::euler_from_lattice(BigRational::parse(chi),
                                            BigRational::parse(covol), base);
  out.result_line("chi", m.str());
  return kExitOk;
}

int run_zeta_building(const std::string& file, const std::string& q_text,
                      const std::string& parabolic_csv, bool pro_p, int ssrank,
                      const std::string& truncate_text, int max_len,
                      std::optional<long> eval_at, Output& out) {
  const CoxeterSystem sys = load_coxeter(file);
  const BigInt q = parse_bigint(q_text, "-q");
  const BigInt truncate = parse_bigint(truncate_text, "--truncate");
  out.input("coxeter", file);
  out.input("q", q.get_str());
  out.input("truncate", truncate.get_str());
  out.input("max-len", std::to_string(max_len));

  if (parabolic_csv.empty() && !pro_p) {
    const auto z = epzeta::zeta_chamber(sys, q, max_len);
    epzeta::DirichletSeries capped(std::min(truncate, z.series.bound()));
    for (const auto& [n, c] : z.series.counts()) capped.add(n, c);
    out.block("series (n count)", capped.str());
    out.result_line("series complete up to", capped.bound().get_str());
    out.result_line("rational form in t = q^-s (num | den)", z.rational_form.str());
    if (eval_at) {
      if (*eval_at == 0 && sys.classify_finite() == std::nullopt)
        throw epzeta::Error("s = 0 evaluates at t = 1; use the rational form");
      const BigRational t = epzeta::pow(BigRational(q), -*eval_at);
      out.result_line("value at s=" + std::to_string(*eval_at),
                      z.rational_form.eval(t).str());
    }
    return kExitOk;
  }

  if (eval_at && *eval_at != -1)
    throw epzeta::Error(
        "--eval-at beyond s=-1 is available at the chamber level only");
  GeneratorSet J = parse_subset(parabolic_csv, sys.rank());
  const epzeta::ParabolicZetaData data(sys, q, J, max_len);
  if (!pro_p) {
    const auto z = epzeta::zeta_parabolic(data);
    epzeta::DirichletSeries capped(std::min(truncate, z.series.bound()));
    for (const auto& [n, c] : z.series.counts()) capped.add(n, c);
    out.input("parabolic", epzeta::parabolic_name(J));
    out.block("series (n count)", capped.str());
    out.result_line("series complete up to", capped.bound().get_str());
    out.result_line("|P_J:B|", z.index_in_chamber_base.get_str());
    out.result_line("value at s=-1", z.value_at_minus_one.str());
    return kExitOk;
  }

  int n = ssrank;
  if (n <= 0) {
    try {
      n = epzeta::zeta_iwahori_functional(sys, q).rank_n;
    } catch (const epzeta::Error&) {
      throw epzeta::Error("--pro-p needs --ssrank for systems without a "
                          "recognized affine structure");
    }
  }
  out.input("parabolic", epzeta::parabolic_name(J));
  out.input("ssrank", std::to_string(n));
  const epzeta::ProPRadicalData pdata(data, n);
  const auto z = epzeta::zeta_pro_p(pdata);
  epzeta::DirichletSeries capped(std::min(truncate, z.series.bound()));
  for (const auto& [nn, c] : z.series.counts()) capped.add(nn, c);
  out.block("series (n count)", capped.str());
  out.result_line("series complete up to", capped.bound().get_str());
  out.result_line("|P_J:P1_J|", z.index_pj_p1j.get_str());
  out.result_line("value at s=-1", z.value_at_minus_one.str());
  return kExitOk;
}

int run_zeta_tree(const std::string& d_text, const std::string& subgroup,
                  const std::string& truncate_text, std::optional<long> eval_at,
                  Output& out) {
  const BigInt d = parse_bigint(d_text, "-d");
  const BigInt truncate = parse_bigint(truncate_text, "--truncate");
  out.input("d", d.get_str());
  out.input("subgroup", subgroup);
  out.input("truncate", truncate.get_str());
  if (subgroup == "edge") {
    const auto z = epzeta::zeta_tree_edge(d, truncate);
    out.block("series (n count)", z.series.str());
    out.result_line("rational form in t = d^-s (num | den)", z.rational_form.str());
    out.result_line("value at s=-1", z.value_at_minus_one.str());
    if (eval_at)
      out.result_line("value at s=" + std::to_string(*eval_at),
                      z.rational_form.eval(epzeta::pow(BigRational(d), -*eval_at)).str());
  } else if (subgroup == "vertex") {
    const auto z = epzeta::zeta_tree_vertex(d, truncate);
    out.block("series (n count)", z.series.str());
    out.result_line("rational form", "none in a single variable; exact values at integer s");
    out.result_line("value at s=-1", z.value_at_minus_one.str());
    if (eval_at)
      out.result_line("value at s=" + std::to_string(*eval_at),
                      epzeta::zeta_tree_vertex_value(d, *eval_at).str());
  } else {
    throw epzeta::Error("--subgroup must be 'vertex' or 'edge'");
  }
  return kExitOk;
}

int run_hecke(const std::string& file, const std::string& q_text,
              const std::string& op, const std::string& input_file,
              const std::string& base, Output& out) {
  const CoxeterSystem sys = load_coxeter(file);
  const BigRational q = BigRational::parse(q_text);
  out.input("coxeter", file);
  out.input("q", q.str());
  out.input("op", op);
  out.input("input", input_file);
  std::ifstream in(input_file);
  if (!in) throw epzeta::Error("cannot open file '" + input_file + "'");
  const auto parsed = epzeta::parse_hecke_input(in, input_file);
  const epzeta::HeckeAlgebraQ alg(sys, q);

  auto render = [](const epzeta::HeckeElement<BigRational>& e) {
    std::ostringstream os;
    for (const auto& [w, c] : e.terms()) {
      os << "term " << c.str() << " w";
      for (int s : w.word()) os << ' ' << (s + 1);
      os << '\n';
    }
    if (e.terms().empty()) os << "term 0 w\n";
    return os.str();
  };

  if (op == "mult") {
    if (parsed.matrix_dim || parsed.elements.size() != 2)
      throw epzeta::Error("mult expects exactly two element blocks");
    const auto a = epzeta::build_hecke_element(alg, parsed.elements[0]);
    const auto b = epzeta::build_hecke_element(alg, parsed.elements[1]);
    out.block("product", render(alg.mult(a, b)));
  } else if (op == "trace") {
    if (parsed.matrix_dim || parsed.elements.size() != 1)
      throw epzeta::Error("trace expects exactly one element block");
    const auto a = epzeta::build_hecke_element(alg, parsed.elements[0]);
    out.result_line("trace", a.trace().str());
    out.result_line("eps", alg.eps(a).str());
  } else if (op == "rank") {
    if (!parsed.matrix_dim)
      throw epzeta::Error("rank expects a matrix input (leading 'matrix N' line)");
    const int n = *parsed.matrix_dim;
    epzeta::HeckeMatrix<BigRational> m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = epzeta::build_hecke_element(
            alg, parsed.elements[static_cast<std::size_t>(i * n + j)]);
    out.result_line("rank", epzeta::hattori_stallings_rank(alg, m, base).str());
  } else {
    throw epzeta::Error("hecke op must be one of mult|trace|rank");
  }
  return kExitOk;
}

int run_verify(const std::string& suite, Output& out) {
  std::vector<CheckResult> results;
  if (suite == "growth") results = epzeta::verify_growth();
  else if (suite == "euler") results = epzeta::verify_euler();
  else if (suite == "zeta") results = epzeta::verify_zeta();
  else if (suite == "hecke") results = epzeta::verify_hecke();
  else if (suite == "all") results = epzeta::verify_all();
  else throw epzeta::Error("--suite must be growth|euler|zeta|hecke|all");

  out.input("suite", suite);
  std::size_t passed = 0;
  for (const auto& r : results) {
    out.identity(r.name, r.pass, r.detail);
    if (r.pass) ++passed;
  }
  out.result_line("passed", std::to_string(passed) + "/" + std::to_string(results.size()));
  return epzeta::all_passed(results) ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler characteristics and double coset zeta functions "
               "of groups acting on trees and buildings"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // growth
  std::string growth_file;
  int growth_maxlen = 12;
  bool growth_exact = false;
  auto* growth = app.add_subcommand("growth", "growth series of a Coxeter system");
  growth->add_option("-c,--coxeter", growth_file, "Coxeter input file")->required();
  growth->add_option("--max-len", growth_maxlen, "enumeration bound (default 12)");
  growth->add_flag("--exact", growth_exact, "also compute the rational form");

  // euler
  auto* euler = app.add_subcommand("euler", "Euler-Poincare characteristics");
  euler->require_subcommand(1);
  std::string eb_file, eb_q = "2";
  auto* eb = euler->add_subcommand("building", "chamber-transitive building action");
  eb->add_option("-c,--coxeter", eb_file, "Coxeter input file")->required();
  eb->add_option("-q", eb_q, "uniform thickness parameter")->required();
  std::string eg_file, eg_base;
  auto* eg = euler->add_subcommand("gog", "graph of profinite groups");
  eg->add_option("-g,--graph", eg_file, "graph-of-groups file")->required();
  eg->add_option("--base", eg_base, "base subgroup for the result");
  std::string ec_type = "A", ec_q = "2";
  int ec_rank = 1;
  auto* ec = euler->add_subcommand("chevalley", "split semisimple closed form");
  ec->add_option("--type", ec_type, "Cartan letter A..G")->required();
  ec->add_option("--rank", ec_rank, "rank")->required();
  ec->add_option("-q", ec_q, "residue cardinality")->required();
  std::string ex_file, ex_ctx, ex_base;
  auto* ex = euler->add_subcommand("complex", "orbit data of a cocompact action");
  ex->add_option("-f,--file", ex_file, "orbit-complex file")->required();
  ex->add_option("--ctx", ex_ctx, "commensurability context file");
  ex->add_option("--base", ex_base, "base subgroup for the result");
  std::string el_chi, el_covol, el_base = "O";
  auto* el = euler->add_subcommand("lattice", "uniform lattice route");
  el->add_option("--chi", el_chi, "Euler characteristic of the lattice (p/q)")->required();
  el->add_option("--covol", el_covol, "covolume (p/q)")->required();
  el->add_option("--base", el_base, "base subgroup name (default O)");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "double coset zeta functions");
  zeta->require_subcommand(1);
  std::string zb_file, zb_q = "2", zb_parabolic, zb_truncate = "20";
  bool zb_prop = false;
  int zb_ssrank = 0, zb_maxlen = 12;
  long zb_eval = 0;
  bool zb_have_eval = false;
  auto* zb = zeta->add_subcommand("building", "Weyl-transitive building action");
  zb->add_option("-c,--coxeter", zb_file, "Coxeter input file")->required();
  zb->add_option("-q", zb_q, "uniform thickness parameter")->required();
  zb->add_option("--parabolic", zb_parabolic, "spherical subset J, e.g. 1,2");
  zb->add_flag("--pro-p", zb_prop, "pro-p radical level");
  zb->add_option("--ssrank", zb_ssrank, "semisimple rank for --pro-p");
  zb->add_option("--truncate", zb_truncate, "series bound on n (default 20)");
  zb->add_option("--max-len", zb_maxlen, "enumeration bound (default 12)");
  zb->add_option("--eval-at", zb_eval, "evaluate at integer s (chamber level)")
      ->each([&](const std::string&) { zb_have_eval = true; });
  std::string zt_d, zt_subgroup, zt_truncate = "20";
  long zt_eval = 0;
  bool zt_have_eval = false;
  auto* zt = zeta->add_subcommand("tree", "regular tree automorphism groups");
  zt->add_option("-d", zt_d, "vertex degree minus one")->required();
  zt->add_option("--subgroup", zt_subgroup, "vertex|edge")->required();
  zt->add_option("--truncate", zt_truncate, "series bound on n (default 20)");
  zt->add_option("--eval-at", zt_eval, "evaluate at a nonzero integer s")
      ->each([&](const std::string&) { zt_have_eval = true; });

  // hecke
  std::string h_file, h_q = "2", h_op, h_input, h_base = "B";
  auto* hecke = app.add_subcommand("hecke", "Iwahori-Hecke computations");
  hecke->add_option("-c,--coxeter", h_file, "Coxeter input file")->required();
  hecke->add_option("-q", h_q, "Hecke parameter (rational)")->required();
  hecke->add_option("op", h_op, "mult|trace|rank")->required();
  hecke->add_option("-i,--input", h_input, "Hecke expression file")->required();
  hecke->add_option("--base", h_base, "base subgroup for ranks (default B)");

  // verify
  std::string v_suite = "all";
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", v_suite, "growth|euler|zeta|hecke|all");

  CLI11_PARSE(app, argc, argv);

  try {
    int code = kExitOk;
    if (growth->parsed()) {
      Output out("growth");
      out.as_json = as_json;
      code = run_growth(growth_file, growth_maxlen, growth_exact, out);
      out.flush();
    } else if (eb->parsed()) {
      Output out("euler building");
      out.as_json = as_json;
      code = run_euler_building(eb_file, eb_q, out);
      out.flush();
    } else if (eg->parsed()) {
      Output out("euler gog");
      out.as_json = as_json;
      code = run_euler_gog(eg_file, eg_base, out);
      out.flush();
    } else if (ec->parsed()) {
      Output out("euler chevalley");
      out.as_json = as_json;
      code = run_euler_chevalley(ec_type, ec_rank, ec_q, out);
      out.flush();
    } else if (ex->parsed()) {
      Output out("euler complex");
      out.as_json = as_json;
      code = run_euler_complex(ex_file, ex_ctx, ex_base, out);
      out.flush();
    } else if (el->parsed()) {
      Output out("euler lattice");
      out.as_json = as_json;
      code = run_euler_lattice(el_chi, el_covol, el_base, out);
      out.flush();
    } else if (zb->parsed()) {
      Output out("zeta building");
      out.as_json = as_json;
      code = run_zeta_building(zb_file, zb_q, zb_parabolic, zb_prop, zb_ssrank,
                               zb_truncate, zb_maxlen,
                               zb_have_eval ? std::optional<long>(zb_eval) : std::nullopt,
                               out);
      out.flush();
    } else if (zt->parsed()) {
      Output out("zeta tree");
      out.as_json = as_json;
      code = run_zeta_tree(zt_d, zt_subgroup, zt_truncate,
                           zt_have_eval ? std::optional<long>(zt_eval) : std::nullopt,
                           out);
      out.flush();
    } else if (hecke->parsed()) {
      Output out("hecke");
      out.as_json = as_json;
      code = run_hecke(h_file, h_q, h_op, h_input, h_base, out);
      out.flush();
    } else if (verify->parsed()) {
      Output out("verify");
      out.as_json = as_json;
      code = run_verify(v_suite, out);
      out.flush();
    }
    return code;
  } catch (const epzeta::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}
