#include "repvar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "repvar/alexander.hpp"
#include "repvar/catalog.hpp"
#include "repvar/cohomology.hpp"

namespace repvar::cli {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_comments(const std::string& text) {
  std::string out;
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    out += comment ? ' ' : c;
  }
  return out;
}

// Splits on sep at parenthesis depth 0.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

Presentation load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

// ---------------------------------------------------------------------------
// JSON helpers

ordered_json to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

ordered_json to_json(const Vector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

// exponent -> coefficient
ordered_json to_json(const LaurentPoly& p) {
  ordered_json o = ordered_json::object();
  for (long e = p.low(); !p.is_zero() && e <= p.high(); ++e)
    if (!p.coeff(e).is_zero()) o[std::to_string(e)] = p.coeff(e).str();
  return o;
}

ordered_json images_json(const Representation& r) {
  ordered_json o = ordered_json::object();
  const auto& names = r.presentation().generator_names;
  for (std::size_t g = 0; g < names.size(); ++g) o[names[g]] = to_json(r.image(static_cast<int>(g)));
  return o;
}

ordered_json cochain_json(const Presentation& p, const std::vector<Matrix>& u) {
  ordered_json o = ordered_json::object();
  for (std::size_t g = 0; g < u.size(); ++g) o[p.generator_names[g]] = to_json(u[g]);
  return o;
}

ordered_json verdict_json(const RootVerdict& v) {
  return {{"point", v.point.str()}, {"value", v.value.str()}, {"is_root", v.is_root}, {"is_simple", v.is_simple_root}};
}

void write_text(const ordered_json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      write_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const ordered_json& x) { return x.is_primitive(); });
    if (scalars) {
      out << prefix << ": [";
      for (std::size_t i = 0; i < j.size(); ++i)
        out << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      out << "]\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) write_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

// ---------------------------------------------------------------------------

struct Options {
  std::string presentation, rep, module, cochain, format = "json";
  std::vector<std::string> lambdas, words;
  std::optional<std::size_t> boundary_tori;
  std::size_t order = 2;
  long field_order = 24;
  std::string catalog_action, catalog_id;
};

class Job {
 public:
  Job(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  Presentation presentation() const {
    if (!o_.rep.empty()) return rep().presentation();
    if (o_.presentation.empty()) throw Error("--presentation is required");
    return load_presentation(o_.presentation);
  }

  Representation rep() const {
    if (o_.rep.empty()) throw Error("--rep is required");
    return load_rep(o_.rep, o_.presentation, o_.field_order);
  }

  Cyc parse(const std::string& expr) const { return parse_cyc(expr, o_.field_order); }

  ModuleSpec module_spec(const Representation* base) const {
    const std::string& m = o_.module;
    if (m.empty() || m == "ad-sl") return ModuleSpec::ad_sl();
    if (m == "ad-gl") return ModuleSpec::ad_gl();
    auto colon = m.find(':');
    std::string kind = m.substr(0, colon), arg = colon == std::string::npos ? "" : m.substr(colon + 1);
    if (kind == "one-dim") return ModuleSpec::one_dim(parse(arg));
    if (kind == "hom") {
      auto parts = split_top(arg, ',');
      if (parts.size() != 2) throw Error("--module hom:A,B expects two representation files");
      std::string pres = o_.presentation;
      Representation a = load_rep(parts[0], pres, o_.field_order), b = load_rep(parts[1], pres, o_.field_order);
      if (base && !(a.presentation() == base->presentation()))
        throw PresentationMismatch("hom module and --rep use different presentations");
      return ModuleSpec::hom(a, b);
    }
    if (kind == "metabelian") {
      auto parts = split_top(arg, ',');
      if (parts.size() != 2) throw Error("--module metabelian:ALPHA,N expects two values");
      return ModuleSpec::metabelian(parse(parts[0]), std::stoul(parts[1]));
    }
    throw Error("unknown module '" + m + "'");
  }

  int emit(const std::string& command, ordered_json body, int code) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    if (o_.format == "text")
      write_text(j, "", out_);
    else
      out_ << j.dump(2) << "\n";
    return code;
  }

  int check_rep() {
    try {
      Representation r = rep();
      return emit("check-rep", {{"valid", true}, {"rank", r.rank()}, {"field_order", r.order()},
                                {"determinant_target", r.determinant_target().str()}},
                  kOk);
    } catch (const RelationViolated& e) {
      return emit("check-rep", {{"valid", false}, {"error", e.kind()}, {"relator", e.relator() + 1},
                                {"defect", to_json(e.defect())}, {"message", e.what()}},
                  kNegative);
    } catch (const DeterminantMismatch& e) {
      return emit("check-rep", {{"valid", false}, {"error", e.kind()}, {"message", e.what()}}, kNegative);
    }
  }

  int cocycles() {
    Representation r = rep();
    ModuleSpec spec = module_spec(&r);
    CocycleSpace z = cocycle_space(r, spec);
    ordered_json basis = ordered_json::array();
    for (const auto& v : z.basis) basis.push_back(to_json(v));
    return emit("cocycles", {{"module", spec.str()}, {"module_dim", z.module_dim}, {"z1", z.dim()}, {"basis", basis}},
                kOk);
  }

  int cohomology() {
    Representation r = rep();
    ModuleSpec spec = module_spec(&r);
    CohomologyReport c = cohomology_dims(r, spec);
    ordered_json j = {{"module", c.module}, {"h0", c.h0}, {"z1", c.z1}, {"b1", c.b1}, {"h1", c.h1},
                      {"h2_complex", c.h2_complex}};
    j["regular"] = nullptr;
    j["expected_h1"] = nullptr;
    j["predicted_component_dim"] = nullptr;
    j["witnesses"] = ordered_json::array();
    if (o_.boundary_tori && spec.kind == ModuleSpec::Kind::AdSl) {
      RegularityVerdict v = check_infinitesimal_regularity(r, *o_.boundary_tori);
      j["regular"] = v.regular;
      j["expected_h1"] = v.expected_h1;
      if (v.predicted_component_dim >= 0) j["predicted_component_dim"] = v.predicted_component_dim;
      if (!v.certificate.empty()) j["witnesses"].push_back(v.certificate);
    }
    return emit("cohomology", j, kOk);
  }

  int regularity() {
    Representation r = rep();
    RegularityVerdict v = check_infinitesimal_regularity(r, o_.boundary_tori.value_or(1));
    ordered_json j = {{"infinitesimally_regular", v.infinitesimally_regular},
                      {"regular", v.regular},
                      {"h0", v.h0},
                      {"z1", v.z1},
                      {"h1", v.h1},
                      {"expected_h1", v.expected_h1}};
    j["predicted_component_dim"] = v.predicted_component_dim >= 0 ? ordered_json(v.predicted_component_dim) : nullptr;
    j["certified_local_dim"] = v.certified_local_dim ? ordered_json(*v.certified_local_dim) : nullptr;
    j["certificate"] = v.certificate;
    return emit("regularity", j, v.regular ? kOk : kNegative);
  }

  int alexander() {
    AlexanderData a;
    if (!o_.rep.empty()) {
      Representation r = rep();
      a = o_.module.empty() ? alexander_polynomials(r)
                            : alexander_polynomials(r.presentation(), module_action(r, module_spec(&r)));
    } else {
      a = alexander_polynomials(trivial_rep(presentation()));
    }
    ordered_json evals = ordered_json::array();
    for (const auto& l : o_.lambdas) evals.push_back(verdict_json(root_verdict(a.delta1, parse(l))));
    return emit("alexander",
                {{"delta0", to_json(a.delta0)},
                 {"delta1", to_json(a.delta1)},
                 {"delta1_text", a.delta1.str()},
                 {"column_deleted", a.column_deleted},
                 {"evaluations", evals}},
                kOk);
  }

  int deform_condition() {
    if (o_.lambdas.size() != 1) throw Error("deform-condition needs exactly one --lambda");
    Cyc lambda = parse(o_.lambdas[0]);
    if (o_.module.rfind("hom:", 0) == 0) {
      ModuleSpec spec = module_spec(nullptr);
      GeneralVerdict v = deformation_condition_general(*spec.alpha, *spec.beta, lambda);
      bool holds = v.at_ab.is_root && v.at_ba.is_root;
      return emit("deform-condition",
                  {{"mode", "general"},
                   {"delta_ab", to_json(v.delta_ab)},
                   {"delta_ba", to_json(v.delta_ba)},
                   {"at_ab", verdict_json(v.at_ab)},
                   {"at_ba", verdict_json(v.at_ba)},
                   {"duality_holds", v.duality_holds},
                   {"necessary_condition_holds", holds}},
                  holds ? kOk : kNegative);
    }
    Presentation p = presentation();
    RootVerdict v = deformation_condition_n2(p, lambda);
    return emit("deform-condition",
                {{"mode", "n2"},
                 {"delta", to_json(alexander_polynomial(p))},
                 {"evaluation", verdict_json(v)},
                 {"necessary_condition_holds", v.is_root}},
                v.is_root ? kOk : kNegative);
  }

  int obstruction() {
    Representation r = rep();
    if (o_.cochain.empty()) throw Error("--cochain is required");
    RepFile cf = parse_rep_file(read_file(o_.cochain));
    const Presentation& p = r.presentation();
    long order = cf.field_order ? cf.field_order : o_.field_order;
    std::vector<Matrix> u1(p.generator_count(), Matrix(r.rank(), r.rank()));
    std::vector<bool> seen(p.generator_count(), false);
    for (const auto& [name, rows] : cf.matrices) {
      int g = p.generator_index(name);
      if (g < 0) throw Error("unknown generator '" + name + "' in cochain file");
      std::vector<Cyc> e;
      for (const auto& row : rows)
        for (const auto& s : row) e.push_back(parse_cyc(s, order));
      if (rows.size() != r.rank() || e.size() != r.rank() * r.rank())
        throw DimensionMismatch("cochain value for '" + name + "' has the wrong shape");
      u1[g] = Matrix(r.rank(), r.rank(), e);
      seen[g] = true;
    }
    TruncatedDeformation d{r, {u1}};
    ordered_json steps = ordered_json::array();
    while (d.order() < o_.order) {
      ObstructionResult res = obstruction_step(d);
      if (!res.extends)
        return emit("obstruction",
                    {{"extends", false}, {"obstructed_at_order", res.order}, {"defect", to_json(res.defect)},
                     {"extensions", steps}},
                    kNegative);
      steps.push_back(cochain_json(p, res.extension));
      d.cochains.push_back(res.extension);
    }
    return emit("obstruction", {{"extends", true}, {"order", d.order()}, {"extensions", steps}}, kOk);
  }

  int irreducible() {
    Representation r = rep();
    IrreducibilityResult res = is_irreducible(r);
    ordered_json words = ordered_json::array();
    for (const auto& w : res.spanning_words) words.push_back(word_str(r.presentation(), w));
    ordered_json j = {{"irreducible", res.irreducible}, {"algebra_dim", res.algebra_dim}, {"spanning_words", words}};
    j["invariant_subspace"] = res.invariant_subspace ? to_json(*res.invariant_subspace) : ordered_json(nullptr);
    j["witness_outside_field"] = res.witness_outside_field;
    return emit("irreducible", j, res.irreducible ? kOk : kNegative);
  }

  int character() {
    Representation r = rep();
    const Presentation& p = r.presentation();
    std::vector<Word> words;
    for (const auto& w : o_.words) words.push_back(parse_word(p, w));
    if (words.empty()) {
      for (int g = 0; g < p.generator_count(); ++g) words.push_back(Word::gen(g));
      for (int g = 0; g < p.generator_count(); ++g)
        for (int h = g + 1; h < p.generator_count(); ++h) words.push_back(Word::gen(g) * Word::gen(h));
    }
    Character c = character_of(r, words);
    ordered_json vals = ordered_json::object();
    for (std::size_t i = 0; i < words.size(); ++i) vals[word_str(p, words[i])] = c.values[i].str();
    return emit("character", {{"values", vals}}, kOk);
  }

  int metabelian() {
    Presentation p = presentation();
    ModuleSpec spec = module_spec(nullptr);
    if (spec.kind != ModuleSpec::Kind::Metabelian) throw Error("metabelian needs --module metabelian:ALPHA,N");
    auto basis = solve_metabelian_cocycles(p, spec.scalar, spec.n);
    ordered_json b = ordered_json::array();
    for (const auto& v : basis) b.push_back(to_json(v));
    ordered_json j = {{"alpha", spec.scalar.str()}, {"n", spec.n}, {"cocycle_dim", basis.size()}, {"basis", b}};
    j["representation"] = nullptr;
    if (!basis.empty()) {
      auto z = split_cochain(basis[0], p.generator_count(), spec.n - 1);
      Representation r = build_metabelian(p, spec.scalar, spec.n, z);
      j["representation"] = images_json(metabelian_gln_form(r));
      j["determinant_target"] = r.determinant_target().str();
      j["irreducible"] = is_irreducible(r).irreducible;
      if (!o_.lambdas.empty()) j["sl_form"] = images_json(metabelian_sl(r, spec.scalar, parse(o_.lambdas[0])));
    }
    return emit("metabelian", j, kOk);
  }

  int catalog() {
    if (o_.catalog_action == "list") {
      ordered_json ids = catalog_ids();
      return emit("catalog", {{"entries", ids}}, kOk);
    }
    if (o_.catalog_action != "run") throw Error("catalog expects 'list' or 'run <id>'");
    if (o_.catalog_id.empty()) throw Error("catalog run needs an entry id");
    auto results = run_entry(o_.catalog_id);
    ordered_json a = ordered_json::array();
    bool all = true;
    for (const auto& r : results) {
      a.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"passed", r.passed}});
      all = all && r.passed;
    }
    return emit("catalog", {{"entry", o_.catalog_id}, {"all_passed", all}, {"assertions", a}}, all ? kOk : kNegative);
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

RepFile parse_rep_file(const std::string& raw) {
  std::string text = strip_comments(raw);
  RepFile f;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto until = [&](char c) {
    auto j = text.find(c, i);
    if (j == std::string::npos) throw SyntaxError(std::string("expected '") + c + "'", text.size());
    std::string s = text.substr(i, j - i);
    i = j + 1;
    return trim(s);
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    std::string word = text.substr(start, i - start);
    if (word.empty()) throw SyntaxError("expected a statement", start);
    skip_ws();
    if (word == "presentation" && i < text.size() && text[i] != '=') {
      f.presentation_path = until(';');
    } else if (word == "field" && i < text.size() && text[i] != '=') {
      std::string n = until(';');
      try {
        f.field_order = std::stol(n);
      } catch (const std::exception&) {
        throw SyntaxError("bad field order '" + n + "'", start);
      }
      if (f.field_order < 1) throw SyntaxError("field order must be positive", start);
    } else if (word == "det" && i < text.size() && text[i] != '=') {
      f.det = until(';');
    } else {
      if (i >= text.size() || text[i] != '=') throw SyntaxError("expected '='", i);
      ++i;
      skip_ws();
      if (i >= text.size() || text[i] != '[') throw SyntaxError("expected '['", i);
      ++i;
      std::string body = until(']');
      std::vector<std::vector<std::string>> rows;
      for (const auto& row : split_top(body, ';')) {
        if (row.empty()) continue;
        rows.push_back(split_top(row, ','));
      }
      f.matrices.emplace_back(word, rows);
      skip_ws();
      if (i < text.size() && text[i] == ';') ++i;
    }
  }
  return f;
}

Representation load_rep(const std::string& rep_path, const std::string& presentation_path, long default_field_order) {
  RepFile f = parse_rep_file(read_file(rep_path));
  std::string pres_path = presentation_path;
  if (pres_path.empty()) {
    if (f.presentation_path.empty()) throw Error("no presentation given for '" + rep_path + "'");
    fs::path p(f.presentation_path);
    pres_path = p.is_absolute() ? p.string() : (fs::path(rep_path).parent_path() / p).string();
  }
  Presentation p = load_presentation(pres_path);
  long order = f.field_order ? f.field_order : default_field_order;
  std::vector<std::optional<Matrix>> images(p.generator_count());
  for (const auto& [name, rows] : f.matrices) {
    int g = p.generator_index(name);
    if (g < 0) throw Error("unknown generator '" + name + "' in '" + rep_path + "'");
    std::size_t n = rows.size();
    std::vector<Cyc> e;
    for (const auto& row : rows) {
      if (row.size() != n) throw DimensionMismatch("matrix for '" + name + "' is not square");
      for (const auto& s : row) e.push_back(parse_cyc(s, order));
    }
    images[g] = Matrix(n, n, e);
  }
  std::vector<Matrix> ms;
  for (int g = 0; g < p.generator_count(); ++g) {
    if (!images[g]) throw DimensionMismatch("no matrix for generator '" + p.generator_names[g] + "'");
    ms.push_back(*images[g]);
  }
  return make_rep(p, ms, parse_cyc(f.det, order));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on representation varieties of finitely presented groups", "repvar"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--presentation", o.presentation, "presentation file");
    sub->add_option("--rep", o.rep, "representation file");
    sub->add_option("--module", o.module, "ad-sl | ad-gl | one-dim:LAMBDA | hom:A,B | metabelian:ALPHA,N");
    sub->add_option("--lambda", o.lambdas, "field element (repeatable)")->allow_extra_args(false);
    sub->add_option("--boundary-tori", o.boundary_tori, "number of boundary tori");
    sub->add_option("--order", o.order, "target truncation order for obstruction");
    sub->add_option("--cochain", o.cochain, "first-order cochain file for obstruction");
    sub->add_option("--word", o.words, "word for character evaluation (repeatable)")->allow_extra_args(false);
    sub->add_option("--field-order", o.field_order, "cyclotomic field order")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"check-rep", "verify that the matrices satisfy the relators"},
      {"cocycles", "basis of the cocycle space"},
      {"cohomology", "dimensions h0, z1, b1, h1, h2"},
      {"regularity", "infinitesimal regularity verdict"},
      {"alexander", "twisted Alexander polynomials"},
      {"deform-condition", "necessary condition for deforming a diagonal representation"},
      {"obstruction", "extend a first-order deformation"},
      {"irreducible", "Burnside irreducibility test"},
      {"character", "traces of words"},
      {"metabelian", "metabelian representations from Jordan blocks"},
  };
  std::map<CLI::App*, std::string> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    subs[sub] = name;
  }
  CLI::App* cat = app.add_subcommand("catalog", "catalog of examples: list | run <id>");
  cat->add_option("action", o.catalog_action, "list or run")->required();
  cat->add_option("id", o.catalog_id, "entry id");
  cat->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  subs[cat] = "catalog";

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::string command;
  for (const auto& [sub, name] : subs)
    if (sub->parsed()) command = name;

  Job job(o, out);
  try {
    if (command == "check-rep") return job.check_rep();
    if (command == "cocycles") return job.cocycles();
    if (command == "cohomology") return job.cohomology();
    if (command == "regularity") return job.regularity();
    if (command == "alexander") return job.alexander();
    if (command == "deform-condition") return job.deform_condition();
    if (command == "obstruction") return job.obstruction();
    if (command == "irreducible") return job.irreducible();
    if (command == "character") return job.character();
    if (command == "metabelian") return job.metabelian();
    if (command == "catalog") return job.catalog();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace repvar::cli
