#include "hecke_cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <regex>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] void config_error(const std::string& what) { fail(ErrorCode::ConfigError, what); }

int parse_int(const std::string& key, const std::string& v) {
  static const std::regex re("-?[0-9]+");
  if (!std::regex_match(v, re)) config_error(key + ": expected an integer, got '" + v + "'");
  return std::stoi(v);
}

/// `z^a`, `z` or `1`.
long parse_root(const std::string& key, const std::string& v) {
  static const std::regex re("z(\\^\\{?(-?[0-9]+)\\}?)?");
  std::smatch m;
  if (v == "1") return 0;
  if (!std::regex_match(v, m, re)) config_error(key + ": expected a power of z, got '" + v + "'");
  return m[2].matched ? std::stol(m[2].str()) : 1;
}

json check_json(const SuiteCheck& c) {
  json j;
  j["suite"] = c.suite;
  j["name"] = c.name;
  j["ref"] = c.ref;
  j["ok"] = c.ok;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}
  void add(const std::string& name, const std::string& ref, bool ok, const std::string& detail = {}) {
    out_.push_back({suite_, name, ref, ok, detail});
  }
  void add_all(const std::vector<Check>& checks, const std::string& ref, const std::string& prefix = {}) {
    for (const auto& c : checks) add(prefix + c.name, ref, c.ok, c.detail);
  }
  std::vector<SuiteCheck> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<SuiteCheck> out_;
};

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }
long ipow(long b, int e) {
  long out = 1;
  while (e-- > 0) out *= b;
  return out;
}

std::vector<SuiteCheck> suite_relations(const SessionConfig& cfg) {
  Recorder rec("relations");
  Algebra A(cfg.params());
  const Params& P = A.params();
  int n = A.n();
  Scalar q = P.q, one = Scalar::one(A.field());
  Element t0 = A.T(0);

  Element order = A.one();
  for (const auto& Qk : P.Q) order = A.mul(order, elem_sub(A.pow(t0, P.p), A.scalar(Qk.pow(P.p))));
  rec.add("prod (T_0^p - Q_k^p) = 0", "dfn21", order.empty());
  Element expanded = A.one();
  for (const auto& Qs : P.expanded()) expanded = A.mul(expanded, elem_sub(t0, A.scalar(Qs)));
  rec.add("prod (T_0 - Q'_j) = 0 with Q'_{i+pj+1} = eps^i Q_{j+1}", "dfn21", expanded.empty());
  if (n >= 2) {
    Element T1 = A.T(1);
    rec.add("T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0", "dfn21", A.mul(A.mul(t0, T1), A.mul(t0, T1)) == A.mul(A.mul(T1, t0), A.mul(T1, t0)));
  }
  bool quad = true, braid = true, comm0 = true, comm = true;
  for (int i = 1; i < n; ++i) {
    Element Ti = A.T(i);
    quad = quad && elem_sub(A.mul(Ti, Ti), elem_add(elem_scale(Ti, q - one), A.scalar(q))).empty();
    if (i + 1 < n) {
      Element Tj = A.T(i + 1);
      braid = braid && A.mul(A.mul(Ti, Tj), Ti) == A.mul(A.mul(Tj, Ti), Tj);
    }
    if (i >= 2) comm0 = comm0 && A.mul(t0, Ti) == A.mul(Ti, t0);
    for (int j = i + 2; j < n; ++j) comm = comm && A.mul(Ti, A.T(j)) == A.mul(A.T(j), Ti);
  }
  rec.add("(T_i + 1)(T_i - q) = 0", "dfn21", quad);
  rec.add("T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", "dfn21", braid);
  rec.add("T_0 T_j = T_j T_0 for j >= 2", "dfn21", comm0);
  rec.add("T_i T_j = T_j T_i for 1 <= i < j-1", "dfn21", comm);

  long expect = ipow(P.r, n) * factorial(n);
  rec.add("dim H_{r,n} = r^n n!", "dfn21", A.dim() == expect, std::to_string(A.dim()));
  long sub = static_cast<long>(A.subalgebra_basis().size());
  rec.add("subalgebra basis count = r^n n!/p", "Hrpn basis", sub * P.p == expect, std::to_string(sub));
  return rec.take();
}

std::vector<SuiteCheck> suite_cellular(const SessionConfig& cfg) {
  Recorder rec("cellular");
  Algebra A(cfg.params());
  Cellular C(A);
  rec.add("Murphy change of basis invertible", "basis", rank(C.change_of_basis()) == A.dim());
  long total = 0;
  bool rel = true;
  for (const auto& lam : C.shapes()) {
    const SpechtModule& S = C.specht(lam);
    total += static_cast<long>(S.dim()) * S.dim();
    rel = rel && satisfies_relations(A, S.rep);
  }
  rec.add("sum dim S(lambda)^2 = dim H_{r,n}", "basis", total == A.dim(), std::to_string(total));
  rec.add("Specht modules satisfy the relations", "basis", rel);
  if (cfg.generic()) {
    bool full = true;
    for (const auto& lam : C.shapes()) full = full && C.simple(lam).rank == C.specht(lam).dim();
    rec.add("generic Gram matrices nondegenerate", "basis", full);
  }
  return rec.take();
}

std::vector<SuiteCheck> suite_morita(const SessionConfig& cfg) {
  Recorder rec("morita");
  Params P = cfg.params();
  Algebra A(grouped_params(P, orbit_partition(P)));
  Cellular C(A);
  Morita M(C);
  rec.add("kappa = " + std::to_string(M.partition().kappa), "main1", M.partition().kappa >= 1);
  std::vector<VbModule> full, fixed;
  for (const auto& b : M.compositions()) {
    std::string tag = "b = " + b.to_string() + ": ";
    rec.add_all(M.shift_identities(b), "v-shift", tag);
    rec.add_all(M.vanishing_identities(b), "v-vanishing", tag);
    full.push_back(M.vb_basis(b, false));
    fixed.push_back(M.vb_basis(b, true));
    rec.add(tag + "p dim v_b H_{r,p,n} = dim v_b H_{r,n}", "basis2", P.p * fixed.back().dim() == full.back().dim(),
            std::to_string(fixed.back().dim()) + " / " + std::to_string(full.back().dim()));
    EndoReport E = M.endo_verify_main1(b);
    rec.add_all(E.checks, "main1", tag);
    rec.add(tag + "dim End_{H_{r,p,n}}(V^b) = p dim H_b", "dim", E.end_rpn == P.p * E.dim_Hb,
            std::to_string(E.end_rpn));
    HpbReport H = M.hpb_prime(b);
    rec.add_all(H.checks, "main1 two", tag);
  }
  auto comps = M.compositions();
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = 0; j < comps.size(); ++j) {
      if (i == j) continue;
      std::string tag = comps[i].to_string() + " -> " + comps[j].to_string();
      rec.add("Hom(V^b, V^c) = 0, " + tag, "V-basis", hom_dimension(full[i].rep, full[j].rep) == 0);
      rec.add("Hom(v_b H_{r,p,n}, v_c H_{r,p,n}) = 0, " + tag, "V-basis", hom_dimension(fixed[i].rep, fixed[j].rep) == 0);
    }
  return rec.take();
}

std::vector<SuiteCheck> suite_clifford(const SessionConfig& cfg) {
  Recorder rec("clifford");
  ModularSystem sys = cfg.system();
  Algebra A(sys.generic_params());
  Cellular C(A);
  Twisting tw = sigma_twisting(A.params());
  std::vector<Representation> spechts;
  for (const auto& lam : C.shapes()) spechts.push_back(C.specht(lam).rep);
  auto simples = simples_of_crossed_product(spechts, tw);
  long total = 0;
  for (const auto& s : simples) total += static_cast<long>(s.module.dim()) * s.module.dim();
  rec.add("sum dim^2 over simples of H_{r,n} x Z_p = p dim H_{r,n}", "2lm", total == static_cast<long>(A.params().p) * A.dim(),
          std::to_string(simples.size()) + " simples");
  for (size_t k = 0; k < spechts.size(); ++k) {
    InertiaData data = inertia_group(spechts[k], tw);
    if (data.l == 1) continue;
    std::vector<CrossedModule> L;
    std::vector<std::vector<Scalar>> chars;
    for (int i = 0; i < data.l; ++i) {
      L.push_back(module_Lli(data, i, tw));
      chars.push_back(crossed_character(A, L.back(), tw));
    }
    std::vector<Scalar> sum = chars[0];
    for (int i = 1; i < data.l; ++i)
      for (size_t w = 0; w < sum.size(); ++w) sum[w] += chars[i][w];
    bool ok = true;
    for (int i = 0; i < data.l; ++i)
      ok = ok && crossed_character(A, induce_crossed(restrict_crossed(L[i], 1, tw), data.l, tw), tw) == sum;
    rec.add("restriction-induction of L_{l,i} for " + C.shapes()[k].to_string(), "2lm", ok, "l = " + std::to_string(data.l));
  }
  return rec.take();
}

std::vector<SuiteCheck> suite_decomp(const SessionConfig& cfg) {
  Recorder rec("decomp");
  ModularSystem sys = cfg.system();
  DirectResult d = simples_and_decomp_hrpn_direct(sys);
  rec.add_all(d.checks, "main2");
  rec.add_all(verify_cyclicity(d.matrix), "verifycyclic");
  ReducedResult r = decomp_hrpn_reduced(sys);
  CompareReport cmp = compare_matrices(d.matrix, r.matrix);
  rec.add("direct matrix equals reduced matrix", "main2", cmp.equal);
  if (cfg.generic()) rec.add("generic matrices are identities", "main2", d.matrix.is_identity() && r.matrix.is_identity());
  HrnFamily fam(sys);
  rec.add_all(block_compatibility(fam), "main2", "blocks: ");
  return rec.take();
}

json config_json(const SessionConfig& cfg) {
  json j;
  j["r"] = cfg.r;
  j["p"] = cfg.p;
  j["n"] = cfg.n;
  j["M"] = cfg.M;
  j["q"] = cfg.q_power ? "z^" + std::to_string(*cfg.q_power) : "x";
  json Q = json::array();
  for (long b : cfg.Q_powers) Q.push_back("z^" + std::to_string(b));
  j["Q"] = Q;
  return j;
}

json label_json(const SimpleLabel& l) {
  json j;
  j["shape"] = l.shape.to_string();
  j["l"] = l.l;
  j["i"] = l.i;
  return j;
}

json rep_json(const Representation& R) {
  json gens = json::array();
  for (const auto& g : R.gens) {
    json rows = json::array();
    for (int a = 0; a < g.rows(); ++a) {
      json row = json::array();
      for (int b = 0; b < g.cols(); ++b) row.push_back(g.at(a, b).to_string());
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  json j;
  j["dim"] = R.dim;
  j["generators"] = gens;
  return j;
}

}  // namespace

std::vector<SuiteCheck> run_suite(const std::string& name, const SessionConfig& cfg) {
  try {
    if (name == "relations") return suite_relations(cfg);
    if (name == "cellular") return suite_cellular(cfg);
    if (name == "morita") return suite_morita(cfg);
    if (name == "clifford") return suite_clifford(cfg);
    if (name == "decomp") return suite_decomp(cfg);
  } catch (const Error& e) {
    return {{name, std::string("raised ") + error_name(e.code()), "", false, e.what()}};
  }
  config_error("unknown suite '" + name + "'");
}

Params SessionConfig::params() const {
  ModularSystem sys = system();
  return generic() ? sys.generic_params() : sys.special_params();
}

SessionConfig parse_config(const std::string& text) {
  SessionConfig cfg;
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) config_error("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (kv.count(key)) config_error("duplicate key '" + key + "'");
    kv[key] = value;
  }
  for (const char* req : {"r", "p", "n", "M", "q", "Q"})
    if (!kv.count(req)) config_error(std::string("missing key '") + req + "'");
  for (const auto& [key, value] : kv) {
    if (key == "r") cfg.r = parse_int(key, value);
    else if (key == "p") cfg.p = parse_int(key, value);
    else if (key == "n") cfg.n = parse_int(key, value);
    else if (key == "M") cfg.M = parse_int(key, value);
    else if (key == "q") {
      if (value != "x") cfg.q_power = parse_root(key, value);
    } else if (key == "Q") {
      for (const auto& item : split_list(value)) cfg.Q_powers.push_back(parse_root(key, item));
    } else if (key == "suites") {
      cfg.suites = split_list(value);
      for (const auto& s : cfg.suites)
        if (s != "decomp" && std::find(verify_suites().begin(), verify_suites().end(), s) == verify_suites().end())
          config_error("unknown suite '" + s + "'");
    } else if (key == "out") {
      cfg.out = value;
    } else {
      config_error("unknown key '" + key + "'");
    }
  }
  if (cfg.r < 1 || cfg.n < 1 || cfg.M < 1 || cfg.p < 1) config_error("r, p, n and M must be positive");
  if (cfg.r % cfg.p != 0) config_error("p must divide r");
  if (cfg.M % cfg.p != 0) config_error("p must divide M");
  if (static_cast<int>(cfg.Q_powers.size()) != cfg.r / cfg.p)
    config_error("Q must list r/p = " + std::to_string(cfg.r / cfg.p) + " parameters");
  return cfg;
}

SessionConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> all{"relations", "cellular", "morita", "clifford"};
  return all;
}

json matrix_json(const DecompositionMatrix& m) {
  json j, rows = json::array(), cols = json::array();
  for (const auto& l : m.rows) rows.push_back(label_json(l));
  for (const auto& l : m.cols) cols.push_back(label_json(l));
  j["rows"] = rows;
  j["cols"] = cols;
  j["entries"] = m.entries;
  return j;
}

CommandResult cmd_verify(const SessionConfig& cfg, int jobs) {
  std::vector<std::string> suites = cfg.suites.empty() ? verify_suites() : cfg.suites;
  std::vector<std::vector<SuiteCheck>> results(suites.size());
  // suites share no state beyond the locked field caches; results are collected in input order
  size_t next = 0;
  while (next < suites.size()) {
    std::vector<std::future<std::vector<SuiteCheck>>> batch;
    size_t start = next;
    for (int k = 0; k < std::max(1, jobs) && next < suites.size(); ++k, ++next)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run_suite, suites[next], cfg));
    for (size_t k = 0; k < batch.size(); ++k) results[start + k] = batch[k].get();
  }
  CommandResult res;
  json checks = json::array();
  const SuiteCheck* first_fail = nullptr;
  int passed = 0, total = 0;
  for (const auto& r : results)
    for (const auto& c : r) {
      checks.push_back(check_json(c));
      ++total;
      if (c.ok) ++passed;
      else if (!first_fail) first_fail = &c;
    }
  res.report["command"] = "verify";
  res.report["config"] = config_json(cfg);
  res.report["suites"] = suites;
  res.report["checks"] = checks;
  res.report["passed"] = passed;
  res.report["total"] = total;
  if (first_fail) res.report["first_failure"] = first_fail->suite + ": " + first_fail->name;
  res.exit_code = first_fail ? 1 : 0;
  return res;
}

CommandResult cmd_decomp(const SessionConfig& cfg, const std::string& mode) {
  if (mode != "direct" && mode != "reduced" && mode != "both") config_error("mode must be direct, reduced or both");
  CommandResult res;
  res.report["command"] = "decomp";
  res.report["config"] = config_json(cfg);
  res.report["mode"] = mode;
  ModularSystem sys = cfg.system();
  try {
    std::optional<DecompositionMatrix> d, r;
    if (mode != "reduced") {
      DirectResult dr = simples_and_decomp_hrpn_direct(sys);
      d = dr.matrix;
      res.report["direct"] = matrix_json(*d);
      json checks = json::array();
      for (const auto& c : dr.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
      res.report["direct_checks"] = checks;
      for (const auto& c : dr.checks)
        if (!c.ok) res.exit_code = 1;
    }
    if (mode != "direct") {
      ReducedResult rr = decomp_hrpn_reduced(sys);
      r = rr.matrix;
      res.report["reduced"] = matrix_json(*r);
      res.report["trace"] = rr.trace;
    }
    if (d && r) {
      CompareReport cmp = compare_matrices(*d, *r);
      res.report["equal"] = cmp.equal;
      res.report["notes"] = cmp.notes;
      if (!cmp.equal) res.exit_code = 1;
    }
  } catch (const Error& e) {
    res.report["error"] = e.what();
    res.exit_code = 1;
  }
  return res;
}

CommandResult cmd_inspect(const SessionConfig& cfg, const std::string& object, const std::string& arg) {
  CommandResult res;
  res.report["command"] = "inspect";
  res.report["config"] = config_json(cfg);
  res.report["object"] = object;
  Algebra A(cfg.params());
  if (object == "basis") {
    json words = json::array();
    for (int k = 0; k < A.dim(); ++k) {
      Accumulator acc(A.field(), A.dim());
      acc.add(k, Scalar::one(A.field()));
      words.push_back(A.to_string(acc.take()));
    }
    res.report["dim"] = A.dim();
    res.report["words"] = words;
    res.report["subalgebra_basis"] = A.subalgebra_basis();
  } else if (object == "blocks") {
    json classes = json::array();
    for (const auto& cls : blocks(A.params())) {
      json c = json::array();
      for (const auto& lam : cls) c.push_back(lam.to_string());
      classes.push_back(c);
    }
    res.report["blocks"] = classes;
  } else if (object == "specht") {
    Multipartition lam = Multipartition::parse(arg);
    if (lam.r() != A.r() || lam.size() != A.n()) fail(ErrorCode::UnknownObject, "no Specht module " + arg + " for these parameters");
    Cellular C(A);
    const SpechtModule& S = C.specht(lam);
    res.report["shape"] = lam.to_string();
    res.report["module"] = rep_json(S.rep);
    res.report["gram_rank"] = rank(S.gram);
  } else if (object == "vb") {
    Composition b = Composition::parse(arg);
    OrbitPartition part = orbit_partition(A.params());
    Algebra G(grouped_params(A.params(), part));
    Cellular C(G);
    Morita M(C);
    if (b.kappa() != part.kappa || b.n() != G.n())
      fail(ErrorCode::UnknownObject, "b must be a composition of n with kappa = " + std::to_string(part.kappa) + " parts");
    res.report["b"] = b.to_string();
    res.report["kappa"] = part.kappa;
    res.report["v_b"] = G.to_string(M.v_b(b).v);
    res.report["dim_vbH"] = M.vb_basis(b, false).dim();
  } else {
    fail(ErrorCode::UnknownObject, "unknown object '" + object + "'");
  }
  return res;
}

}  // namespace hecke::cli
