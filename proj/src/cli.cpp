#include "negsq/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "negsq/admissible.hpp"
#include "negsq/bounds.hpp"
#include "negsq/cover.hpp"
#include "negsq/errors.hpp"
#include "negsq/lattice.hpp"
#include "negsq/model_io.hpp"

namespace negsq::cli {

namespace {

using nlohmann::json;

constexpr const char* kNotExcluded = "not excluded by these obstructions";
constexpr const char* kConjectureBanner =
    "CONDITIONAL on Conjecture 1 (M <= c(X) + kappa g_B for classes divisible by 2, "
    "kappa < 4), which is open";

struct ManifoldFlags {
  std::string catalog;
  std::string invariants;
  std::string gram;

  bool given() const { return !catalog.empty() || !invariants.empty() || !gram.empty(); }
};

struct Loaded {
  ManifoldModel model;
  json description;
};

bool parse_bool(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "true" || t == "1" || t == "spin" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "nonspin" || t == "no") return false;
  throw ValidationError("expected a boolean, got '" + text + "'");
}

Loaded load_manifold(const ManifoldFlags& flags) {
  const int sources = !flags.catalog.empty() + !flags.invariants.empty() + !flags.gram.empty();
  if (sources == 0)
    throw ValidationError("a manifold is required: use --catalog, --invariants or --gram");
  if (sources > 1)
    throw ValidationError("--catalog, --invariants and --gram are mutually exclusive");

  json desc;
  std::optional<ManifoldModel> model;
  if (!flags.catalog.empty()) {
    model = catalog_lookup(flags.catalog);
    desc = {{"source", "catalog"}, {"name", flags.catalog}};
  } else if (!flags.invariants.empty()) {
    const auto parts = split_list(flags.invariants);
    if (parts.size() != 3)
      throw ValidationError("--invariants expects b2,sigma,spin, got '" + flags.invariants + "'");
    model = ManifoldModel::from_invariants(parse_integer(parts[0]), parse_integer(parts[1]),
                                           parse_bool(parts[2]));
    desc = {{"source", "invariants"}};
  } else {
    model = model_from_file(flags.gram);
    desc = {{"source", model->has_form() ? "gram" : "invariants-file"}, {"file", flags.gram}};
  }
  desc["b2"] = integer_to_json(model->b2());
  desc["sigma"] = integer_to_json(model->sigma());
  desc["spin"] = model->spin();
  return Loaded{std::move(*model), std::move(desc)};
}

HomClass parse_class(const std::string& text) {
  HomClass x;
  for (const auto& part : split_list(text)) x.coords.push_back(parse_integer(part));
  if (x.coords.empty()) throw ValidationError("empty class coordinates");
  return x;
}

json class_json(const HomClass& x) {
  json out = json::array();
  for (const auto& c : x.coords) out.push_back(integer_to_json(c));
  return out;
}

std::string describe(const json& manifold) {
  std::ostringstream os;
  const std::string source = manifold.at("source");
  os << source;
  if (manifold.contains("name")) os << " " << manifold.at("name").get<std::string>();
  if (manifold.contains("file")) os << " " << manifold.at("file").get<std::string>();
  os << " (b2=" << manifold.at("b2").dump() << ", sigma=" << manifold.at("sigma").dump() << ", "
     << (manifold.at("spin").get<bool>() ? "spin" : "not spin") << ")";
  return os.str();
}

// Exact fraction, then an exact decimal and the floor when non-integral.
std::string show(const Rational& r) {
  if (is_integral(r)) return to_string(r);
  std::string s = to_string(r);
  const std::string decimal = terminating_decimal(r);
  s += " (";
  if (!decimal.empty()) s += "= " + decimal + ", ";
  s += "floor " + to_string(floor_of(r)) + ")";
  return s;
}

json outcome_json(const BoundOutcome& o) {
  json hyps = json::array();
  for (const auto& h : o.hypotheses()) hyps.push_back({{"name", h.name}, {"satisfied", h.satisfied}});
  return {{"theorem", std::string(theorem_tag(o.theorem()))},
          {"applicable", o.applicable()},
          {"value", o.applicable() ? rational_to_json(*o.value()) : json(nullptr)},
          {"hypotheses", hyps}};
}

void print_outcomes(std::ostream& out, const std::vector<BoundOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    out << "  " << std::left << std::setw(20) << theorem_tag(o.theorem());
    if (o.applicable())
      out << "N <= " << show(*o.value()) << "\n";
    else
      out << "not applicable\n";
    for (const auto& h : o.hypotheses())
      out << "      [" << (h.satisfied ? "x" : " ") << "] " << h.name << "\n";
  }
}

struct Document {
  std::string command;
  json inputs = json::object();
  json outcomes = json::array();
  json candidates = json::array();
  json warnings = json::array();
  json result = json::object();

  json to_json() const {
    return {{"command", command},       {"inputs", inputs},     {"outcomes", outcomes},
            {"candidates", candidates}, {"warnings", warnings}, {"result", result}};
  }
};

void add_model_warnings(Document& doc, const ManifoldModel& model) {
  for (const auto& w : model.warnings()) doc.warnings.push_back(w);
}

void print_warnings(std::ostream& out, const Document& doc) {
  for (const auto& w : doc.warnings) out << "warning: " << w.get<std::string>() << "\n";
}

struct KindFlags {
  std::int64_t divisible = 0;
  bool c_char = false;
  bool characteristic = false;
  bool sphere = false;
};

std::optional<ClassKind> parse_kind(const KindFlags& f) {
  if (f.divisible != 0 && f.characteristic)
    throw ValidationError("--divisible and --characteristic are mutually exclusive");
  if (f.sphere && !f.characteristic)
    throw ValidationError("--sphere applies to --characteristic classes only");
  if (f.c_char && f.divisible == 0)
    throw ValidationError("--c-char needs --divisible");
  if (f.divisible != 0) return ClassKind{DivisibleKind{PrimePower(f.divisible), f.c_char}};
  if (f.characteristic) return ClassKind{CharacteristicKind{f.sphere}};
  return std::nullopt;
}

json kind_json(const ClassKind& kind) {
  if (const auto* d = std::get_if<DivisibleKind>(&kind))
    return {{"kind", "divisible"}, {"q", d->q.q()}, {"c_over_q_characteristic", d->cOverQCharacteristic}};
  return {{"kind", "characteristic"}, {"sphere", std::get<CharacteristicKind>(kind).sphereFilter}};
}

// Commands --------------------------------------------------------------------

Document cmd_classify(const ManifoldFlags& mf, const std::string& class_text) {
  const Loaded loaded = load_manifold(mf);
  const GramForm* form = loaded.model.form();
  if (!form)
    throw ValidationError("classification needs a Gram form (use --catalog or --gram with a matrix)");
  const HomClass x = parse_class(class_text);

  Document doc;
  doc.command = "classify";
  doc.inputs = {{"manifold", loaded.description}, {"class", class_json(x)}};
  doc.result = {{"square", integer_to_json(square(*form, x))},
                {"divisibility", integer_to_json(divisibility(x))},
                {"characteristic", is_characteristic(*form, x)},
                {"form_even", is_even(*form)}};
  add_model_warnings(doc, loaded.model);
  return doc;
}

void print_classify(std::ostream& out, const Document& doc) {
  const json& r = doc.result;
  out << "manifold:       " << describe(doc.inputs.at("manifold")) << "\n"
      << "square:         " << r.at("square").dump() << "\n"
      << "divisibility:   " << r.at("divisibility").dump() << "\n"
      << "characteristic: " << (r.at("characteristic").get<bool>() ? "yes" : "no") << "\n"
      << "form parity:    " << (r.at("form_even").get<bool>() ? "even" : "odd") << "\n";
}

struct CoverFlags {
  std::int64_t q = 0;
  long long genus = 0;
  std::optional<std::string> square;
  std::string class_text;
  bool branch_char = false;
};

Document cmd_cover(const ManifoldFlags& mf, const CoverFlags& f) {
  const Loaded loaded = load_manifold(mf);
  const PrimePower q(f.q);
  if (f.square.has_value() == !f.class_text.empty())
    throw ValidationError("give exactly one of --square and --class for the branch surface");

  Integer squareB;
  bool branch_char = f.branch_char;
  if (!f.class_text.empty()) {
    const GramForm* form = loaded.model.form();
    if (!form) throw ValidationError("--class needs a Gram form (use --catalog or --gram)");
    if (f.branch_char)
      throw ValidationError("--branch-char is computed from --class and cannot be given with it");
    const HomClass b = parse_class(f.class_text);
    const Integer d = divisibility(b);
    if (d == 0 || d % q.value() != 0)
      throw DivisibilityViolation("branch class has divisibility " + d.str() +
                                  ", not a multiple of q = " + std::to_string(q.q()));
    squareB = square(*form, b);
    branch_char = is_characteristic(*form, b.divided(q.value()));
  } else {
    squareB = parse_integer(*f.square);
  }

  const CoverInvariants y = branched_cover(q, loaded.model.b2(), loaded.model.sigma(),
                                           loaded.model.spin(), Integer(f.genus), squareB,
                                           branch_char);
  Document doc;
  doc.command = "cover";
  doc.inputs = {{"manifold", loaded.description},
                {"q", q.q()},
                {"branch_genus", f.genus},
                {"branch_square", integer_to_json(squareB)},
                {"branch_over_q_characteristic", branch_char}};
  if (!f.class_text.empty()) doc.inputs["class"] = class_json(parse_class(f.class_text));
  doc.result = {{"b2", integer_to_json(y.b2)},
                {"sigma", integer_to_json(y.sigma)},
                {"spin", y.spin},
                {"betti_signature_ok", betti_signature_check(y.b2, y.sigma)},
                {"furuta_applies", y.spin && y.b2 > 0},
                {"furuta_ok", furuta_check(y.b2, y.sigma)}};
  add_model_warnings(doc, loaded.model);
  return doc;
}

void print_cover(std::ostream& out, const Document& doc) {
  const json& r = doc.result;
  out << "manifold:        " << describe(doc.inputs.at("manifold")) << "\n"
      << "cover:           " << doc.inputs.at("q").dump() << "-fold, branched over genus "
      << doc.inputs.at("branch_genus").dump() << " surface with B^2 = "
      << doc.inputs.at("branch_square").dump() << "\n"
      << "b2(Y):           " << r.at("b2").dump() << "\n"
      << "sigma(Y):        " << r.at("sigma").dump() << "\n"
      << "Y spin:          " << (r.at("spin").get<bool>() ? "yes" : "no") << "\n"
      << "b2 >= |sigma|:   " << (r.at("betti_signature_ok").get<bool>() ? "ok" : "VIOLATED") << "\n"
      << "5/4 inequality:  ";
  if (!r.at("furuta_applies").get<bool>())
    out << "n/a (Y not spin)\n";
  else
    out << (r.at("furuta_ok").get<bool>() ? "ok" : "VIOLATED") << "\n";
}

struct BoundFlags {
  long long genus = 0;
  KindFlags kind;
  std::string conjectural;
};

struct BoundView {
  std::vector<BoundOutcome> outcomes;
  const BoundOutcome* binding = nullptr;
};

Document cmd_bound(const ManifoldFlags& mf, const BoundFlags& f, BoundView& view) {
  const auto kind = parse_kind(f.kind);
  if (f.kind.sphere) throw ValidationError("--sphere is only meaningful for 'admissible'");
  if (!kind && f.conjectural.empty())
    throw ValidationError("choose --divisible Q, --characteristic or --conjectural");

  Document doc;
  doc.command = "bound";
  doc.inputs = {{"genus", f.genus}};
  std::optional<Loaded> loaded;
  if (kind || mf.given() || f.conjectural == "furuta") loaded = load_manifold(mf);
  if (loaded) {
    doc.inputs["manifold"] = loaded->description;
    add_model_warnings(doc, loaded->model);
  }
  if (kind) {
    doc.inputs["class"] = kind_json(*kind);
    view.outcomes = scenario_bounds(Scenario{loaded->model, Integer(f.genus), *kind});
  }
  const std::size_t proven = view.outcomes.size();

  if (!f.conjectural.empty()) {
    ConjectureParams params;
    if (f.conjectural == "furuta") {
      params = furuta_conjecture_params(loaded->model.b2(), loaded->model.sigma());
    } else {
      const auto parts = split_list(f.conjectural);
      if (parts.size() != 2)
        throw ValidationError("--conjectural expects 'c,kappa' or 'furuta', got '" +
                              f.conjectural + "'");
      params = ConjectureParams{parse_rational(parts[0]), parse_rational(parts[1])};
    }
    doc.inputs["conjecture"] = {{"c", rational_to_json(params.c)},
                                {"kappa", rational_to_json(params.kappa)}};
    view.outcomes.push_back(conjectural_bound(params, Integer(f.genus)));
    doc.warnings.push_back(kConjectureBanner);
  }
  for (const auto& o : view.outcomes) doc.outcomes.push_back(outcome_json(o));

  // The binding bound is taken over proven theorems only.
  for (std::size_t i = 0; i < proven; ++i) {
    const BoundOutcome& o = view.outcomes[i];
    if (o.applicable() && (!view.binding || *o.value() < *view.binding->value()))
      view.binding = &o;
  }
  if (view.binding) {
    const Rational& v = *view.binding->value();
    doc.result = {{"binding", rational_to_json(v)},
                  {"binding_theorem", std::string(theorem_tag(view.binding->theorem()))},
                  {"binding_floor", integer_to_json(floor_of(v))}};
    if (v < 1) doc.warnings.push_back("binding bound is below 1: no surface with A^2 < 0 of this kind");
  } else {
    doc.result = {{"binding", nullptr}, {"binding_theorem", nullptr}, {"binding_floor", nullptr}};
  }
  if (proven < view.outcomes.size())
    doc.result["conjectural"] = rational_to_json(*view.outcomes.back().value());
  return doc;
}

void print_bound(std::ostream& out, const Document& doc, const BoundView& view) {
  if (doc.inputs.contains("manifold"))
    out << "manifold: " << describe(doc.inputs.at("manifold")) << "\n";
  out << "genus:    " << doc.inputs.at("genus").dump() << "\n";
  out << "bounds on N = -A^2:\n";
  print_outcomes(out, view.outcomes);
  if (view.binding)
    out << "binding:  N <= " << show(*view.binding->value()) << "  ["
        << theorem_tag(view.binding->theorem()) << "]\n";
}

struct AdmissibleFlags {
  long long genus = 0;
  KindFlags kind;
  bool linearized = false;
  std::size_t workers = 1;
};

Document cmd_admissible(const ManifoldFlags& mf, const AdmissibleFlags& f,
                        AdmissibleReport& report) {
  const auto kind = parse_kind(f.kind);
  if (!kind) throw ValidationError("choose --divisible Q or --characteristic");
  const Loaded loaded = load_manifold(mf);
  report = enumerate_admissible(Scenario{loaded.model, Integer(f.genus), *kind},
                                EnumerationOptions{!f.linearized, f.workers});

  Document doc;
  doc.command = "admissible";
  doc.inputs = {{"manifold", loaded.description},
                {"genus", f.genus},
                {"class", kind_json(*kind)},
                {"use_abs", !f.linearized}};
  for (const auto& o : report.perBound) doc.outcomes.push_back(outcome_json(o));
  for (const auto& n : report.candidates) doc.candidates.push_back(integer_to_json(n));
  doc.result = {{"ceiling", integer_to_json(report.ceiling)},
                {"filters", report.filtersApplied},
                {"count", report.candidates.size()},
                {"interpretation", kNotExcluded}};
  add_model_warnings(doc, loaded.model);
  return doc;
}

void print_admissible(std::ostream& out, const Document& doc, const AdmissibleReport& report) {
  out << "manifold: " << describe(doc.inputs.at("manifold")) << "\n"
      << "genus:    " << doc.inputs.at("genus").dump() << "\n"
      << "bounds on N = -A^2:\n";
  print_outcomes(out, report.perBound);
  out << "scan:     1 <= N <= " << report.ceiling << "\n";
  for (const auto& f : report.filtersApplied) out << "filter:   " << f << "\n";
  out << "N " << kNotExcluded << " (" << report.candidates.size() << "):";
  if (report.candidates.empty()) out << " none";
  for (const auto& n : report.candidates) out << " " << n;
  out << "\n";
}

Document cmd_catalog() {
  Document doc;
  doc.command = "catalog";
  json entries = json::array();
  for (const auto& e : catalog_entries()) {
    json entry = {{"name", e.name}, {"description", e.description}, {"parametric", e.parametric}};
    if (e.parametric) {
      entry["b2"] = "1+k";
      entry["sigma"] = "1-k";
      entry["spin"] = false;
    } else {
      const ManifoldModel m = catalog(e.name);
      entry["b2"] = integer_to_json(m.b2());
      entry["sigma"] = integer_to_json(m.sigma());
      entry["spin"] = m.spin();
    }
    entries.push_back(entry);
  }
  doc.result = {{"entries", entries}};
  return doc;
}

void print_catalog(std::ostream& out, const Document& doc) {
  out << std::left << std::setw(8) << "name" << std::setw(6) << "b2" << std::setw(7) << "sigma"
      << std::setw(10) << "spin" << "description\n";
  for (const auto& e : doc.result.at("entries")) {
    auto field = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    out << std::setw(8) << e.at("name").get<std::string>() << std::setw(6) << field(e.at("b2"))
        << std::setw(7) << field(e.at("sigma")) << std::setw(10)
        << (e.at("spin").get<bool>() ? "spin" : "-") << e.at("description").get<std::string>()
        << "\n";
  }
}

void add_manifold_options(CLI::App* cmd, ManifoldFlags& mf) {
  auto* cat = cmd->add_option("--catalog", mf.catalog, "built-in manifold: k3, cp2, cp2-K, s2xs2");
  auto* inv = cmd->add_option("--invariants", mf.invariants, "abstract invariants b2,sigma,spin");
  auto* gram = cmd->add_option("--gram", mf.gram, "JSON file with {\"gram\": [[...]]} or invariants");
  cat->excludes(inv)->excludes(gram);
  inv->excludes(gram);
}

void add_kind_options(CLI::App* cmd, KindFlags& kf) {
  cmd->add_option("--divisible", kf.divisible, "[A] is divisible by the prime power Q");
  cmd->add_flag("--c-char", kf.c_char, "(1/Q)[A] is characteristic (even Q)");
  cmd->add_flag("--characteristic", kf.characteristic, "[A] is characteristic");
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  for (const auto& p : parts)
    if (p.empty()) throw ValidationError("empty item in list '" + text + "'");
  return parts;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Admissible negative self-intersections for surfaces in divisible or "
               "characteristic classes of simply-connected 4-manifolds"};
  app.name("negsq");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  ManifoldFlags mf;
  std::string class_text;
  CoverFlags cover_flags;
  BoundFlags bound_flags;
  AdmissibleFlags adm_flags;

  auto* classify = app.add_subcommand("classify", "square, divisibility and parity of a class");
  add_manifold_options(classify, mf);
  classify->add_option("--class", class_text, "coordinates a,b,c,...")->required();

  auto* cover = app.add_subcommand("cover", "invariants of a cyclic branched cover");
  add_manifold_options(cover, mf);
  cover->add_option("--q", cover_flags.q, "prime power degree")->required();
  cover->add_option("--branch-genus", cover_flags.genus, "genus of the branch surface B");
  cover->add_option("--square", cover_flags.square, "B^2");
  cover->add_option("--class", cover_flags.class_text, "branch class coordinates");
  cover->add_flag("--branch-char", cover_flags.branch_char, "(1/q)[B] is characteristic");

  auto* bound = app.add_subcommand("bound", "closed-form upper bounds on N = -A^2");
  add_manifold_options(bound, mf);
  bound->add_option("--genus", bound_flags.genus, "genus of A");
  add_kind_options(bound, bound_flags.kind);
  bound->add_option("--conjectural", bound_flags.conjectural,
                    "conditional bound: 'c,kappa' or 'furuta'");

  auto* admissible = app.add_subcommand("admissible", "enumerate N not excluded by the obstructions");
  add_manifold_options(admissible, mf);
  admissible->add_option("--genus", adm_flags.genus, "genus of A");
  add_kind_options(admissible, adm_flags.kind);
  admissible->add_flag("--sphere", adm_flags.kind.sphere, "apply the mod 16 sphere congruence");
  admissible->add_flag("--linearized", adm_flags.linearized,
                       "drop the absolute value in the 5/4 inequality");
  admissible->add_option("--workers", adm_flags.workers, "threads for the scan")
      ->check(CLI::Range(1, 256));

  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in manifolds");

  std::vector<std::string> argv_storage{"negsq"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    Document doc;
    std::ostringstream table;
    if (classify->parsed()) {
      doc = cmd_classify(mf, class_text);
      print_classify(table, doc);
    } else if (cover->parsed()) {
      doc = cmd_cover(mf, cover_flags);
      print_cover(table, doc);
    } else if (bound->parsed()) {
      BoundView view;
      doc = cmd_bound(mf, bound_flags, view);
      print_bound(table, doc, view);
    } else if (admissible->parsed()) {
      AdmissibleReport report;
      doc = cmd_admissible(mf, adm_flags, report);
      print_admissible(table, doc, report);
    } else if (catalog_cmd->parsed()) {
      doc = cmd_catalog();
      print_catalog(table, doc);
    }

    if (as_json) {
      out << doc.to_json().dump(2) << "\n";
    } else {
      out << table.str();
      print_warnings(out, doc);
    }
    return kOk;
  } catch (const InconsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace negsq::cli
