// Command line front end: enumeration, idempotent resolutions, traces,
// quantum dimensions, seminormal matrices, and a full invariant check,
// with canonical text or JSON output.

#include "hecke/expr.hpp"
#include "hecke/idempotents.hpp"
#include "hecke/seminormal.hpp"
#include "hecke/trace.hpp"
#include "hecke/young_graph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace hecke;

namespace {

struct RunConfig {
  std::string format = "text";  // text | json
  std::string mode = "symbolic";  // symbolic | evaluated
  int samples = 3;
  int order = 4;
  std::string t_list = "2,3,5,7,11";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed rational sample points for evaluated-q mode, away from 0 and +-1.
std::vector<Rational> q_samples(int count) {
  static const int table[][2] = {{3, 2},  {7, 5},  {5, 3},  {9, 7},
                                 {11, 8}, {13, 9}, {15, 11}, {17, 12}};
  if (count < 1 || count > int(std::size(table))) {
    throw UsageError("--samples must be between 1 and " +
                     std::to_string(std::size(table)));
  }
  std::vector<Rational> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(make_rational(table[i][0], table[i][1]));
  }
  return out;
}

std::vector<Rational> parse_t_list(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    try {
      out.push_back(parse_rational(tok.substr(b, e - b + 1)));
    } catch (const std::invalid_argument&) {
      throw UsageError("bad t sample '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError("--t-samples must list at least one value");
  return out;
}

YoungDiagram parse_shape(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty() || s == "0" || s == "()") return YoungDiagram();
  if (s.front() != '(') s = "(" + s + ")";
  try {
    return YoungDiagram::parse(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad shape: ") + e.what());
  }
}

ContentString parse_content_string(const std::string& text) {
  ContentString out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw UsageError("empty entry in content string");
    try {
      size_t used = 0;
      int v = std::stoi(tok.substr(b, e - b + 1), &used);
      if (used != e - b + 1) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad content string entry '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError("--string must list at least one entry");
  return out;
}

json shape_json(const YoungDiagram& d) { return json(d.rows()); }

void emit(const RunConfig& cfg, const json& doc,
          const std::function<void()>& text_writer) {
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    text_writer();
  }
}

// ---------------------------------------------------------------------------
// tableaux --shape L

int cmd_tableaux(const RunConfig& cfg, const std::string& shape_text) {
  YoungDiagram shape = parse_shape(shape_text);
  auto tabs = enumerate_standard(shape);
  json doc;
  doc["schema"] = 1;
  doc["shape"] = shape_json(shape);
  doc["count"] = tabs.size();
  doc["tableaux"] = json::array();
  for (const auto& tab : tabs) {
    json t;
    t["rows"] = tab.rows();
    t["content_string"] = content_string(tab);
    doc["tableaux"].push_back(t);
  }
  emit(cfg, doc, [&] {
    std::cout << "shape " << shape.str() << ": " << tabs.size()
              << " standard tableaux\n";
    for (const auto& tab : tabs) {
      std::cout << "  " << tab.str() << "  content (";
      ContentString cs = content_string(tab);
      for (size_t i = 0; i < cs.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << cs[i];
      }
      std::cout << ")\n";
    }
  });
  return 0;
}

// ---------------------------------------------------------------------------
// graph --n N [--dot]

int cmd_graph(const RunConfig& cfg, int n, bool dot) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  ColouredYoungGraph graph(n);
  if (dot) {
    std::cout << "digraph young {\n  rankdir=BT;\n";
    for (size_t id = 0; id < graph.vertices().size(); ++id) {
      std::cout << "  v" << id << " [label=\"" << graph.vertices()[id].str()
                << "\"];\n";
    }
    for (const auto& e : graph.edges()) {
      std::cout << "  v" << e.from << " -> v" << e.to << " [label=\""
                << e.colour << "\"];\n";
    }
    std::cout << "}\n";
    return 0;
  }
  json doc;
  doc["schema"] = 1;
  doc["n"] = n;
  doc["vertices"] = json::array();
  for (size_t id = 0; id < graph.vertices().size(); ++id) {
    json v;
    v["id"] = id;
    v["shape"] = shape_json(graph.vertices()[id]);
    v["level"] = graph.vertices()[id].size();
    doc["vertices"].push_back(v);
  }
  doc["edges"] = json::array();
  for (const auto& e : graph.edges()) {
    json ej;
    ej["from"] = e.from;
    ej["to"] = e.to;
    ej["colour"] = e.colour;
    doc["edges"].push_back(ej);
  }
  emit(cfg, doc, [&] {
    for (int k = 0; k <= n; ++k) {
      std::cout << "level " << k << ":";
      for (int id : graph.levels()[size_t(k)]) {
        std::cout << " " << graph.vertices()[size_t(id)].str();
      }
      std::cout << "\n";
    }
    for (const auto& e : graph.edges()) {
      std::cout << graph.vertices()[size_t(e.from)].str() << " -> "
                << graph.vertices()[size_t(e.to)].str() << "  colour "
                << e.colour << "\n";
    }
  });
  return 0;
}

// ---------------------------------------------------------------------------
// validate --string "0,1,-1,0"

int cmd_validate(const RunConfig& cfg, const std::string& text) {
  ContentString cs = parse_content_string(text);
  StringValidation res = validate_string(cs);
  json doc;
  doc["schema"] = 1;
  doc["string"] = cs;
  doc["valid"] = res.valid;
  if (!res.valid) {
    doc["condition"] = res.condition;
    doc["position"] = res.position;
    doc["detail"] = res.detail;
  } else {
    StandardTableau tab = tableau_from_string(cs);
    doc["tableau"] = tab.rows();
    doc["shape"] = shape_json(tab.shape());
  }
  emit(cfg, doc, [&] {
    if (res.valid) {
      StandardTableau tab = tableau_from_string(cs);
      std::cout << "valid: true\n"
                << "tableau: " << tab.str() << "\n"
                << "shape: " << tab.shape().str() << "\n";
    } else {
      std::cout << "valid: false\n"
                << "condition: (" << res.condition << ")\n"
                << "position: " << res.position << "\n"
                << "detail: " << res.detail << "\n";
    }
  });
  return res.valid ? 0 : 1;
}

// ---------------------------------------------------------------------------
// idempotents --n N

template <class Ctx>
json idempotent_report(const Ctx& ctx, int n, bool& all_pass) {
  using E = HeckeElement<typename Ctx::Field>;
  auto recs = resolution(ctx, n);
  json doc;
  doc["count"] = recs.size();
  doc["idempotents"] = json::array();
  E sum = E(n);
  for (const auto& rec : recs) {
    json r;
    r["content_string"] = rec.eigenvalues;
    r["shape"] = shape_json(rec.tableau.shape());
    r["tableau"] = rec.tableau.rows();
    doc["idempotents"].push_back(r);
    sum += rec.element;
  }
  bool sum_ok = sum == E::unit(n);
  bool orth_ok = true;
  for (size_t i = 0; i < recs.size(); ++i) {
    for (size_t j = 0; j < recs.size(); ++j) {
      auto prod = idempotent_product(ctx, recs[i], recs[j]);
      if (i == j ? !(prod == recs[i].element) : !prod.is_zero()) orth_ok = false;
    }
  }
  bool eigen_ok = true;
  for (const auto& rec : recs) {
    for (int k = 1; k <= n; ++k) {
      auto lhs = multiply(ctx, jucys_murphy(ctx, k, n), rec.element);
      if (!(lhs == ctx.q_power(2 * rec.eigenvalues[size_t(k - 1)]) * rec.element))
        eigen_ok = false;
    }
  }
  bool ann_ok = true;
  for (const auto& rec : recs) {
    if (!branching_annihilator_check(ctx, rec)) ann_ok = false;
  }
  doc["sum_is_one"] = sum_ok;
  doc["orthogonal"] = orth_ok;
  doc["eigenvalues_match"] = eigen_ok;
  doc["annihilator"] = ann_ok;
  all_pass = sum_ok && orth_ok && eigen_ok && ann_ok;
  return doc;
}

int cmd_idempotents(const RunConfig& cfg, int n) {
  if (n < 1) throw UsageError("--n must be at least 1");
  json doc;
  doc["schema"] = 1;
  doc["n"] = n;
  bool all_pass = true;
  if (cfg.mode == "symbolic") {
    SymbolicCtx ctx;
    try {
      doc.update(idempotent_report(ctx, n, all_pass));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(e.what()) +
                       " (rerun with --mode evaluated to use rational sample "
                       "points for q)");
    }
  } else {
    doc["samples"] = json::array();
    for (const Rational& q0 : q_samples(cfg.samples)) {
      EvaluatedCtx ctx(q0);
      bool pass = true;
      json s = idempotent_report(ctx, n, pass);
      s["q"] = to_string(q0);
      doc["samples"].push_back(s);
      all_pass = all_pass && pass;
    }
  }
  emit(cfg, doc, [&] {
    auto print_report = [](const json& r, const std::string& indent) {
      std::cout << indent << r["count"].get<size_t>() << " idempotents\n";
      for (const auto& rec : r["idempotents"]) {
        std::cout << indent << "  (";
        const auto& cs = rec["content_string"];
        for (size_t i = 0; i < cs.size(); ++i) {
          if (i) std::cout << ",";
          std::cout << cs[i].get<int>();
        }
        std::cout << ")  shape (";
        const auto& sh = rec["shape"];
        for (size_t i = 0; i < sh.size(); ++i) {
          if (i) std::cout << ",";
          std::cout << sh[i].get<int>();
        }
        std::cout << ")\n";
      }
      std::cout << indent << "sum=1: " << (r["sum_is_one"].get<bool>() ? "true" : "false")
                << "\n"
                << indent << "orthogonal: " << (r["orthogonal"].get<bool>() ? "true" : "false")
                << "\n"
                << indent << "eigenvalues: "
                << (r["eigenvalues_match"].get<bool>() ? "true" : "false") << "\n"
                << indent << "annihilator: " << (r["annihilator"].get<bool>() ? "true" : "false")
                << "\n";
    };
    std::cout << "rank " << n << "\n";
    if (cfg.mode == "symbolic") {
      print_report(doc, "");
    } else {
      for (const auto& s : doc["samples"]) {
        std::cout << "q = " << s["q"].get<std::string>() << ":\n";
        print_report(s, "  ");
      }
    }
  });
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// qdim --shape L --d D [--check-trace]

int cmd_qdim(const RunConfig& cfg, const std::string& shape_text, int d,
             bool check_trace) {
  if (d < 1) throw UsageError("--d must be at least 1");
  YoungDiagram shape = parse_shape(shape_text);
  RatFunc closed = qdim_closed(d, shape);
  json doc;
  doc["schema"] = 1;
  doc["shape"] = shape_json(shape);
  doc["d"] = d;
  doc["closed"] = field_str(closed);
  bool equal = true;
  if (check_trace) {
    if (cfg.mode == "symbolic") {
      SymbolicCtx ctx;
      TraceContext<SymbolicCtx> tr(ctx, d);
      try {
        RatFunc via = qdim_via_trace(tr, shape);
        doc["via_trace"] = field_str(via);
        equal = via == closed;
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) +
                         " (rerun with --mode evaluated)");
      }
    } else {
      doc["samples"] = json::array();
      for (const Rational& q0 : q_samples(cfg.samples)) {
        EvaluatedCtx ctx(q0);
        TraceContext<EvaluatedCtx> tr(ctx, d);
        Rational via = qdim_via_trace(tr, shape);
        bool ok = via == closed.eval(q0);
        json s;
        s["q"] = to_string(q0);
        s["via_trace"] = to_string(via);
        s["equal"] = ok;
        doc["samples"].push_back(s);
        equal = equal && ok;
      }
    }
    doc["equal"] = equal;
  }
  emit(cfg, doc, [&] {
    std::cout << "qdim " << shape.str() << " at d=" << d << ": "
              << field_str(closed) << "\n";
    if (check_trace) {
      if (doc.contains("via_trace")) {
        std::cout << "via trace: " << doc["via_trace"].get<std::string>() << "\n";
      } else {
        for (const auto& s : doc["samples"]) {
          std::cout << "via trace at q=" << s["q"].get<std::string>() << ": "
                    << s["via_trace"].get<std::string>() << "\n";
        }
      }
      std::cout << "equal: " << (equal ? "true" : "false") << "\n";
    }
  });
  return equal ? 0 : 1;
}

// ---------------------------------------------------------------------------
// rep --shape L

int cmd_rep(const RunConfig& cfg, const std::string& shape_text) {
  YoungDiagram shape = parse_shape(shape_text);
  if (shape.empty()) throw UsageError("--shape must be nonempty");
  SymbolicCtx ctx;
  SeminormalRep<SymbolicCtx> rep(ctx, shape);
  const int n = rep.n();
  json doc;
  doc["schema"] = 1;
  doc["shape"] = shape_json(shape);
  doc["dimension"] = rep.dim();
  doc["basis"] = json::array();
  for (const auto& tab : rep.basis()) {
    json b;
    b["rows"] = tab.rows();
    b["content_string"] = content_string(tab);
    doc["basis"].push_back(b);
  }
  auto matrix_json = [](const Matrix<RatFunc>& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(field_str(m(r, c)));
      rows.push_back(row);
    }
    return rows;
  };
  doc["generators"] = json::array();
  for (int i = 1; i < n; ++i) {
    json g;
    g["index"] = i;
    g["matrix"] = matrix_json(rep.gen_matrix(i));
    doc["generators"].push_back(g);
  }
  doc["jucys_murphy"] = json::array();
  for (int i = 1; i <= n; ++i) {
    json g;
    g["index"] = i;
    g["matrix"] = matrix_json(jm_matrix(ctx, rep, i));
    doc["jucys_murphy"].push_back(g);
  }
  bool rel_ok = relations_check(ctx, rep);
  bool jm_ok = jm_agreement_check(ctx, rep);
  doc["relations"] = rel_ok;
  doc["jucys_murphy_diagonal"] = jm_ok;
  emit(cfg, doc, [&] {
    std::cout << "shape " << shape.str() << ", dimension " << rep.dim() << "\n";
    std::cout << "basis:\n";
    for (const auto& tab : rep.basis()) {
      ContentString cs = content_string(tab);
      std::cout << "  " << tab.str() << "  content (";
      for (size_t i = 0; i < cs.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << cs[i];
      }
      std::cout << ")\n";
    }
    auto print_matrix = [](const Matrix<RatFunc>& m) {
      for (int r = 0; r < m.rows(); ++r) {
        std::cout << "    [";
        for (int c = 0; c < m.cols(); ++c) {
          if (c) std::cout << ", ";
          std::cout << field_str(m(r, c));
        }
        std::cout << "]\n";
      }
    };
    for (int i = 1; i < n; ++i) {
      std::cout << "  s" << i << ":\n";
      print_matrix(rep.gen_matrix(i));
    }
    for (int i = 1; i <= n; ++i) {
      std::cout << "  y" << i << ":\n";
      print_matrix(jm_matrix(ctx, rep, i));
    }
    std::cout << "relations: " << (rel_ok ? "true" : "false") << "\n"
              << "jucys-murphy diagonal: " << (jm_ok ? "true" : "false") << "\n";
  });
  return rel_ok && jm_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// trace --n N --d D --expr "..."

int cmd_trace(const RunConfig& cfg, int n, int d, const std::string& expr_text) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (d < 1) throw UsageError("--d must be at least 1");
  ExprPtr ast;
  try {
    ast = parse_expression(expr_text, n);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--expr: ") + e.what());
  }
  json doc;
  doc["schema"] = 1;
  doc["n"] = n;
  doc["d"] = d;
  doc["expr"] = render(ast);
  if (cfg.mode == "symbolic") {
    SymbolicCtx ctx;
    TraceContext<SymbolicCtx> tr(ctx, d);
    RatFunc value = ocneanu_trace(tr, evaluate(ctx, ast, n));
    doc["trace"] = field_str(value);
  } else {
    doc["samples"] = json::array();
    for (const Rational& q0 : q_samples(cfg.samples)) {
      EvaluatedCtx ctx(q0);
      TraceContext<EvaluatedCtx> tr(ctx, d);
      Rational value = ocneanu_trace(tr, evaluate(ctx, ast, n));
      json s;
      s["q"] = to_string(q0);
      s["trace"] = to_string(value);
      doc["samples"].push_back(s);
    }
  }
  emit(cfg, doc, [&] {
    std::cout << "expr: " << doc["expr"].get<std::string>() << "\n";
    if (doc.contains("trace")) {
      std::cout << "trace = " << doc["trace"].get<std::string>() << "\n";
    } else {
      for (const auto& s : doc["samples"]) {
        std::cout << "trace at q=" << s["q"].get<std::string>() << " : "
                  << s["trace"].get<std::string>() << "\n";
      }
    }
  });
  return 0;
}

// ---------------------------------------------------------------------------
// check --n N --d D

struct CheckResult {
  std::string name;
  bool pass;
  double seconds;
  std::string note;
};

template <class Ctx>
class Verifier {
 public:
  using F = typename Ctx::Field;
  using E = HeckeElement<F>;

  Verifier(const Ctx& ctx, int n, int d, int order, std::vector<Rational> ts)
      : ctx_(ctx), tr_(ctx, d), n_(n), d_(d), order_(order), ts_(std::move(ts)) {}

  void run(std::vector<CheckResult>& out) {
    auto step = [&](const std::string& name, auto&& fn) {
      auto start = std::chrono::steady_clock::now();
      CheckResult res;
      res.name = name;
      try {
        res.pass = fn();
      } catch (const std::exception& e) {
        res.pass = false;
        res.note = e.what();
      }
      res.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
      out.push_back(std::move(res));
    };

    step("quadratic relation", [&] { return quadratic(); });
    step("braid relation", [&] { return braid(); });
    step("distant generators commute", [&] { return distant(); });
    step("generator inverses", [&] { return inverses(); });
    step("jucys-murphy elements commute", [&] { return jm_commute(); });
    step("jucys-murphy sum and product forms agree", [&] { return jm_forms(); });
    step("intertwiner exchange", [&] { return intertwiners(); });
    step("content strings enumerate standard tableaux", [&] { return strings(); });
    step("young graph paths count tableaux", [&] { return graph_paths(); });
    step("idempotent resolution sums to one", [&] { return idem_sum(); });
    step("idempotents are pairwise orthogonal", [&] { return idem_orth(); });
    step("jucys-murphy eigenvalues on idempotents", [&] { return idem_eigen(); });
    step("branching annihilator", [&] { return idem_annihilator(); });
    step("trace bimodule property", [&] { return trace_bimodule(); });
    step("trace conjugation invariance", [&] { return trace_conjugation(); });
    step("trace normalization", [&] { return trace_normalization(); });
    step("trace cyclicity", [&] { return trace_cyclicity(); });
    step("markov weight tower", [&] { return markov_tower(); });
    step("single box quantum dimension", [&] { return qdim_box(); });
    step("quantum dimension matches the trace", [&] { return qdim_match(); });
    step("quantum dimension recurrence", [&] { return qdim_rec(); });
    step("projector traces follow the branching rule", [&] { return proj_traces(); });
    step("generating identity", [&] { return generating(); });
    step("resolvent exchange identities", [&] { return resolvent_exchange(); });
    step("resolvent trace recurrence", [&] { return resolvent_rec(); });
    step("seminormal relations", [&] { return seminormal_relations(); });
    step("dimension audit", [&] { return dims(); });
    step("idempotent images are matrix units", [&] { return matrix_units(); });
    step("trace decomposes over the shapes", [&] { return trace_decomp(); });
  }

 private:
  E gen(int i) const { return generator(ctx_, i, n_); }
  E jm(int i) const { return jucys_murphy(ctx_, i, n_); }
  E mul(const E& a, const E& b) const { return multiply(ctx_, a, b); }

  bool quadratic() {
    for (int i = 1; i < n_; ++i) {
      E s = gen(i);
      if (!(mul(s, s) == E::unit(n_) + ctx_.delta() * s)) return false;
    }
    return true;
  }

  bool braid() {
    for (int i = 1; i + 1 < n_; ++i) {
      E a = gen(i), b = gen(i + 1);
      if (!(mul(mul(a, b), a) == mul(mul(b, a), b))) return false;
    }
    return true;
  }

  bool distant() {
    for (int i = 1; i < n_; ++i) {
      for (int j = i + 2; j < n_; ++j) {
        if (!(mul(gen(i), gen(j)) == mul(gen(j), gen(i)))) return false;
      }
    }
    return true;
  }

  bool inverses() {
    for (int i = 1; i < n_; ++i) {
      if (!(mul(gen(i), inverse_generator(ctx_, i, n_)) == E::unit(n_)))
        return false;
    }
    return true;
  }

  bool jm_commute() {
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        if (!(mul(jm(i), jm(j)) == mul(jm(j), jm(i)))) return false;
      }
    }
    return true;
  }

  bool jm_forms() {
    for (int i = 1; i <= n_; ++i) {
      if (!(jucys_murphy(ctx_, i, n_, JmForm::Sum) ==
            jucys_murphy(ctx_, i, n_, JmForm::Recursive)))
        return false;
    }
    return true;
  }

  bool intertwiners() {
    for (int m = 1; m < n_; ++m) {
      E u = intertwiner(ctx_, m, n_);
      if (!(mul(u, jm(m)) == mul(jm(m + 1), u))) return false;
      for (int k = 1; k <= n_; ++k) {
        if (k == m || k == m + 1) continue;
        if (!(mul(u, jm(k)) == mul(jm(k), u))) return false;
      }
    }
    return true;
  }

  bool strings() {
    for (const YoungDiagram& shape : partitions(n_)) {
      auto tabs = enumerate_standard(shape);
      if (BigInt(tabs.size()) != frobenius_dim(shape)) return false;
      for (const auto& tab : tabs) {
        ContentString cs = content_string(tab);
        if (!validate_string(cs).valid) return false;
        if (!(tableau_from_string(cs).rows() == tab.rows())) return false;
      }
    }
    return true;
  }

  bool graph_paths() {
    ColouredYoungGraph graph(n_);
    for (const YoungDiagram& shape : partitions(n_)) {
      if (BigInt(graph.paths_to(shape).size()) != frobenius_dim(shape))
        return false;
    }
    return true;
  }

  const std::vector<IdempotentRecord<Ctx>>& records() {
    if (!recs_) recs_ = resolution(ctx_, n_);
    return *recs_;
  }

  bool idem_sum() {
    E sum(n_);
    for (const auto& rec : records()) sum += rec.element;
    return sum == E::unit(n_);
  }

  bool idem_orth() {
    const auto& recs = records();
    for (size_t i = 0; i < recs.size(); ++i) {
      for (size_t j = 0; j < recs.size(); ++j) {
        auto prod = idempotent_product(ctx_, recs[i], recs[j]);
        if (i == j ? !(prod == recs[i].element) : !prod.is_zero()) return false;
      }
    }
    return true;
  }

  bool idem_eigen() {
    for (const auto& rec : records()) {
      for (int k = 1; k <= n_; ++k) {
        if (!(mul(jm(k), rec.element) ==
              ctx_.q_power(2 * rec.eigenvalues[size_t(k - 1)]) * rec.element))
          return false;
      }
    }
    return true;
  }

  bool idem_annihilator() {
    for (const auto& rec : records()) {
      if (!branching_annihilator_check(ctx_, rec)) return false;
    }
    return true;
  }

  std::vector<E> sample_elements(int rank) const {
    std::vector<const char*> sources;
    if (rank >= 2) {
      sources = {"s1", "y2", "s1*y2 + 2", "q*s1 - q^-1*y2 + 1/3"};
    } else {
      sources = {"1", "3/2"};
    }
    if (rank >= 3) sources.push_back("s2*s1 + y3");
    if (rank >= 4) sources.push_back("s3*y4*s2 - q^2*s1");
    std::vector<E> out;
    for (const char* s : sources) {
      out.push_back(evaluate(ctx_, parse_expression(s, rank), rank));
    }
    return out;
  }

  bool trace_bimodule() {
    if (n_ < 2) return true;
    int m = n_ - 1;
    for (const E& x : sample_elements(m)) {
      for (const E& z : sample_elements(n_)) {
        E lhs = conditional_expectation(tr_, mul(mul(promote(x, n_), z),
                                                 promote(x, n_)));
        E rhs = mul(mul(x, conditional_expectation(tr_, z)), x);
        if (!(lhs == rhs)) return false;
      }
    }
    return true;
  }

  // Conjugating a rank-m element by sigma_m drops the expectation one
  // level down the tower.
  bool trace_conjugation() {
    if (n_ < 3) return true;
    int m = n_ - 1;
    E s = gen(m), si = inverse_generator(ctx_, m, n_);
    for (const E& z : sample_elements(m)) {
      E zz = promote(z, n_);
      E expect = promote(conditional_expectation(tr_, z), m);
      if (!(conditional_expectation(tr_, mul(mul(s, zz), si)) == expect))
        return false;
      if (!(conditional_expectation(tr_, mul(mul(si, zz), s)) == expect))
        return false;
    }
    return true;
  }

  bool trace_normalization() {
    if (n_ < 2) return true;
    if (!(conditional_expectation(tr_, gen(n_ - 1)) == E::unit(n_ - 1)))
      return false;
    return conditional_expectation(tr_, E::unit(n_)) == tr_.z * E::unit(n_ - 1);
  }

  bool trace_cyclicity() {
    auto els = sample_elements(n_);
    for (const E& a : els) {
      for (const E& b : els) {
        if (!(ocneanu_trace(tr_, mul(a, b)) == ocneanu_trace(tr_, mul(b, a))))
          return false;
      }
    }
    return true;
  }

  bool markov_tower() {
    F expect = F(1);
    for (int k = 0; k < n_; ++k) expect = expect * tr_.z;
    return ocneanu_trace(tr_, E::unit(n_)) == expect;
  }

  bool qdim_box() {
    return eval_scalar(qdim_closed(d_, YoungDiagram::parse("(1)"))) == tr_.z;
  }

  bool qdim_match() {
    for (const YoungDiagram& shape : partitions(n_)) {
      if (!(qdim_via_trace(tr_, shape) == eval_scalar(qdim_closed(d_, shape))))
        return false;
    }
    return true;
  }

  bool qdim_rec() {
    for (int k = 0; k <= n_; ++k) {
      for (const YoungDiagram& shape : partitions(k)) {
        int corners = int(addable_corners(shape).corners.size());
        for (int j = 1; j <= corners; ++j) {
          if (!qdim_recurrence_check(d_, shape, j)) return false;
        }
      }
    }
    return true;
  }

  bool proj_traces() {
    int top = std::min(n_ - 1, 3);
    for (int m = 1; m <= top; ++m) {
      for (const auto& rec : resolution(ctx_, m)) {
        int corners =
            int(addable_corners(rec.tableau.shape()).corners.size());
        for (int j = 1; j <= corners; ++j) {
          if (!projector_trace_check(tr_, rec, j)) return false;
        }
      }
    }
    return true;
  }

  bool generating() {
    if (!generating_identity_empty_check(tr_, order_)) return false;
    int top = std::min(n_ - 1, 3);
    for (int m = 1; m <= top; ++m) {
      for (const auto& rec : resolution(ctx_, m)) {
        if (!generating_identity_check(tr_, rec, order_)) return false;
      }
    }
    return true;
  }

  bool resolvent_exchange() {
    int top = std::min(n_ - 1, 3);
    for (int m = 1; m <= top; ++m) {
      for (const Rational& t : ts_) {
        if (!resolvent_sandwich_check(ctx_, m, t)) return false;
      }
    }
    return true;
  }

  bool resolvent_rec() {
    int top = std::min(n_ - 1, 3);
    for (int m = 1; m <= top; ++m) {
      for (const Rational& t : ts_) {
        if (!resolvent_recurrence_check(tr_, m, t)) return false;
      }
    }
    return true;
  }

  bool seminormal_relations() {
    for (const YoungDiagram& shape : partitions(n_)) {
      SeminormalRep<Ctx> rep(ctx_, shape);
      if (!relations_check(ctx_, rep)) return false;
      if (!jm_agreement_check(ctx_, rep)) return false;
    }
    return true;
  }

  bool dims() {
    for (int k = 1; k <= std::max(n_, 6); ++k) {
      if (!rep_dimension_audit(k)) return false;
    }
    return true;
  }

  bool matrix_units() {
    return idempotent_matrix_units_check(ctx_, std::min(n_, 4));
  }

  bool trace_decomp() {
    int rank = std::min(n_, 4);
    TraceContext<Ctx> tr(ctx_, d_);
    for (const E& x : sample_elements(rank)) {
      if (!trace_decomposition_check(tr, x)) return false;
    }
    return true;
  }

  F eval_scalar(const RatFunc& f) const {
    if constexpr (std::is_same_v<F, RatFunc>) {
      return f;
    } else {
      return f.eval(ctx_.q0);
    }
  }

  const Ctx& ctx_;
  TraceContext<Ctx> tr_;
  int n_, d_, order_;
  std::vector<Rational> ts_;
  std::optional<std::vector<IdempotentRecord<Ctx>>> recs_;
};

int cmd_check(const RunConfig& cfg, int n, int d) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (d < 1) throw UsageError("--d must be at least 1");
  std::vector<Rational> ts = parse_t_list(cfg.t_list);
  std::vector<CheckResult> results;
  if (cfg.mode == "symbolic") {
    if (n > 5) {
      throw UsageError(
          "rank " + std::to_string(n) +
          " is above the symbolic limit 5; rerun with --mode evaluated");
    }
    SymbolicCtx ctx;
    Verifier<SymbolicCtx> v(ctx, n, d, cfg.order, ts);
    v.run(results);
  } else {
    for (const Rational& q0 : q_samples(cfg.samples)) {
      EvaluatedCtx ctx(q0);
      Verifier<EvaluatedCtx> v(ctx, n, d, cfg.order, ts);
      std::vector<CheckResult> one;
      v.run(one);
      if (results.empty()) {
        results = std::move(one);
      } else {
        for (size_t i = 0; i < results.size(); ++i) {
          results[i].pass = results[i].pass && one[i].pass;
          results[i].seconds += one[i].seconds;
          if (results[i].note.empty()) results[i].note = one[i].note;
        }
      }
    }
  }
  bool all_pass = true;
  json doc;
  doc["schema"] = 1;
  doc["n"] = n;
  doc["d"] = d;
  doc["mode"] = cfg.mode;
  doc["results"] = json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    json rj;
    rj["name"] = r.name;
    rj["pass"] = r.pass;
    rj["seconds"] = r.seconds;
    if (!r.note.empty()) rj["note"] = r.note;
    doc["results"].push_back(rj);
  }
  doc["all_pass"] = all_pass;
  emit(cfg, doc, [&] {
    char buf[32];
    for (const auto& r : results) {
      std::snprintf(buf, sizeof buf, "%7.2fs", r.seconds);
      std::cout << (r.pass ? "pass " : "FAIL ") << buf << "  " << r.name;
      if (!r.note.empty()) std::cout << "  [" << r.note << "]";
      std::cout << "\n";
    }
    std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES") << " (n="
              << n << ", d=" << d << ", " << cfg.mode << ")\n";
  });
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact A-type Hecke algebra toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--mode", cfg.mode, "Arithmetic mode: symbolic or evaluated")
      ->check(CLI::IsMember({"symbolic", "evaluated"}));
  app.add_option("--samples", cfg.samples,
                 "Number of rational q sample points in evaluated mode");
  app.add_option("--order", cfg.order, "Series truncation order for check");
  app.add_option("--t-samples", cfg.t_list,
                 "Comma separated rational t samples for resolvent checks");

  std::string shape_text;
  std::string string_text;
  std::string expr_text;
  int n = 3;
  int d = 1;
  bool dot = false;
  bool check_trace = false;

  CLI::App* c_tableaux =
      app.add_subcommand("tableaux", "Enumerate standard tableaux of a shape");
  c_tableaux->add_option("--shape", shape_text, "Partition, e.g. 2,1")
      ->required();

  CLI::App* c_graph =
      app.add_subcommand("graph", "Print the coloured branching graph");
  c_graph->add_option("--n", n, "Number of levels")->required();
  c_graph->add_flag("--dot", dot, "Emit DOT instead of text/json");

  CLI::App* c_validate =
      app.add_subcommand("validate", "Validate a content string");
  c_validate->add_option("--string", string_text, "e.g. \"0,1,-1,0\"")
      ->required();

  CLI::App* c_idem = app.add_subcommand(
      "idempotents", "Resolution of the identity with verification");
  c_idem->add_option("--n", n, "Rank")->required();

  CLI::App* c_qdim =
      app.add_subcommand("qdim", "Quantum dimension of a shape");
  c_qdim->add_option("--shape", shape_text, "Partition")->required();
  c_qdim->add_option("--d", d, "Positive integer parameter")->required();
  c_qdim->add_flag("--check-trace", check_trace,
                   "Cross-check against the trace of the idempotent");

  CLI::App* c_rep =
      app.add_subcommand("rep", "Seminormal matrices for a shape");
  c_rep->add_option("--shape", shape_text, "Partition")->required();

  CLI::App* c_trace =
      app.add_subcommand("trace", "Trace of an expression");
  c_trace->add_option("--n", n, "Rank")->required();
  c_trace->add_option("--d", d, "Positive integer parameter")->required();
  c_trace->add_option("--expr", expr_text, "Expression over q, s_i, y_i, u_i")
      ->required();

  CLI::App* c_check =
      app.add_subcommand("check", "Run the full invariant suite");
  c_check->add_option("--n", n, "Rank")->required();
  c_check->add_option("--d", d, "Positive integer parameter")->required();

  for (CLI::App* sub : {c_tableaux, c_graph, c_validate, c_idem, c_qdim, c_rep,
                        c_trace, c_check}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_tableaux->parsed()) return cmd_tableaux(cfg, shape_text);
    if (c_graph->parsed()) return cmd_graph(cfg, n, dot);
    if (c_validate->parsed()) return cmd_validate(cfg, string_text);
    if (c_idem->parsed()) return cmd_idempotents(cfg, n);
    if (c_qdim->parsed()) return cmd_qdim(cfg, shape_text, d, check_trace);
    if (c_rep->parsed()) return cmd_rep(cfg, shape_text);
    if (c_trace->parsed()) return cmd_trace(cfg, n, d, expr_text);
    if (c_check->parsed()) return cmd_check(cfg, n, d);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
