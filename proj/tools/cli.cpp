#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "ncat/category_io.hpp"
#include "ncat/cohomology.hpp"
#include "ncat/embeddings.hpp"
#include "ncat/export.hpp"
#include "ncat/factorisation.hpp"
#include "ncat/isomorphism.hpp"
#include "ncat/omega.hpp"

namespace ncat::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";
  bool require_valid = false;
  std::string input;
  std::string other;
  int times = 1;
  int degree = 0;
  std::string coefficients = "const:Z";
  bool tree = false;
  std::string convention = "full";
  bool paper_differential = false;
  std::optional<int> max_degree;
  int max_objects = 3;
  int max_cells = 3;
  std::string output_dir;
};

class Runner {
 public:
  Runner(const Config& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  int validate_cmd() {
    formats({"text", "json"});
    const auto c = load_category(cfg_.input);
    const auto report = validate(c);
    if (cfg_.format == "json") {
      json j{{"valid", report.empty()}, {"violations", json::array()}};
      for (const auto& v : report) {
        j["violations"].push_back({{"law", v.law}, {"witnesses", v.witnesses}, {"detail", v.detail}});
      }
      out_ << j.dump(2) << '\n';
    } else if (report.empty()) {
      out_ << "valid " << category_summary(c) << '\n';
    } else {
      for (const auto& v : report) out_ << format_violation(v) << '\n';
    }
    if (!report.empty()) {
      err_ << cfg_.input << ": " << report.size() << " violation(s)\n";
      return 1;
    }
    return 0;
  }

  int shift_cmd() {
    formats({"text", "json"});
    const auto c = load_checked();
    const auto level = iterated_shift(c, cfg_.times);
    if (cfg_.format == "json") {
      json j = json::array();
      for (const auto& entry : level) {
        json path = json::array();
        for (const auto& tag : entry.path) path.push_back({tag.source, tag.target});
        j.push_back({{"path", path}, {"category", to_json(entry.category)}});
      }
      out_ << j.dump(2) << '\n';
    } else {
      for (const auto& entry : level) {
        std::string path;
        for (const auto& tag : entry.path) {
          path += (path.empty() ? "" : " / ") + ("Hom(" + tag.source + "," + tag.target + ")");
        }
        out_ << (path.empty() ? "root" : path) << ": " << category_summary(entry.category) << '\n';
      }
    }
    return 0;
  }

  int tree_cmd(bool plane) {
    formats({"text", "json", "dot"});
    const auto c = load_checked();
    const auto t = plane ? factorisation_plane(c) : factorisation_tree(c);
    if (cfg_.format == "json") {
      out_ << tree_to_json(t).dump(2) << '\n';
    } else if (cfg_.format == "dot") {
      out_ << tree_to_dot(t, plane ? "plane" : "tree");
    } else {
      out_ << tree_to_text(t);
    }
    return 0;
  }

  int shape_cmd() {
    formats({"text", "json", "dot"});
    const auto c = load_checked();
    const auto s = shape(c);
    if (cfg_.format == "json") {
      out_ << to_json(s).dump(2) << '\n';
    } else if (cfg_.format == "dot") {
      out_ << to_dot(s);
    } else {
      out_ << canonical_form(s) << '\n';
    }
    return 0;
  }

  int iso_cmd() {
    formats({"text", "json"});
    auto a = std::make_shared<const StrictNCategory>(load_category(cfg_.input));
    auto b = std::make_shared<const StrictNCategory>(load_category(cfg_.other));
    std::optional<NFunctor> f;
    if (a->dimension() == b->dimension()) f = are_isomorphic(a, b);
    if (cfg_.format == "json") {
      json j{{"isomorphic", f.has_value()}};
      if (f) {
        json map = json::object();
        for (CellId x = 0; x < a->cell_count(); ++x) map[a->name(x)] = b->name((*f)(x));
        j["map"] = map;
      }
      out_ << j.dump(2) << '\n';
    } else if (f) {
      out_ << "isomorphic\n";
      for (CellId x = 0; x < a->cell_count(); ++x) {
        if (!a->is_identity_cell(x)) out_ << "  " << a->name(x) << " -> " << b->name((*f)(x)) << '\n';
      }
    } else {
      out_ << "not isomorphic\n";
    }
    return 0;
  }

  int cohomology_cmd() {
    formats({"text", "json", "dot"});
    const auto c = load_checked();
    if (cfg_.degree < 0) throw UsageError("--degree must be non-negative");
    const Convention conv =
        cfg_.paper_differential ? Convention::paper : parse_convention(cfg_.convention);
    const int bound = cfg_.max_degree.value_or(default_max_degree(cfg_.degree));
    const CoefficientSpec spec = coefficient_spec();
    if (conv == Convention::paper) {
      err_ << "warning: paper convention (sum from i = 1); d∘d is checked in every degree used\n";
    }
    if (!cfg_.tree) {
      if (cfg_.format == "dot") throw UsageError("--format dot needs --tree");
      const auto h = homotopy_category(c);
      const auto group = thomason_cohomology(h, spec.build(h, bound, 1, 1), cfg_.degree, conv);
      if (cfg_.format == "json") {
        out_ << json{{"vertex", {1, 1}}, {"degree", cfg_.degree}, {"group", group.to_string()}}
                    .dump(2)
             << '\n';
      } else {
        out_ << group.to_string() << '\n';
      }
      return 0;
    }
    const auto plane = factorisation_plane(c);
    const auto result = cohomology_tree(
        plane,
        [&](std::size_t i, std::size_t j, const StrictNCategory& label) {
          return spec.build(label, bound, i, j);
        },
        cfg_.degree, conv);
    if (cfg_.format == "json") {
      out_ << cohomology_to_json(result, cfg_.degree).dump(2) << '\n';
    } else if (cfg_.format == "dot") {
      out_ << cohomology_to_dot(result);
    } else {
      out_ << cohomology_to_text(result);
    }
    return 0;
  }

  int search_cmd() {
    formats({"text", "json"});
    if (cfg_.max_objects < 0 || cfg_.max_cells < 0) throw UsageError("search bounds must be >= 0");
    const auto parts = read_parts();
    const auto hits = embedding_search(parts, cfg_.max_objects, cfg_.max_cells);
    if (!cfg_.output_dir.empty()) {
      fs::create_directories(cfg_.output_dir);
      for (std::size_t k = 0; k < hits.size(); ++k) {
        std::ofstream f(fs::path(cfg_.output_dir) / ("hit_" + std::to_string(k + 1) + ".cat"));
        f << to_json(hits[k]).dump(1) << '\n';
      }
    }
    if (cfg_.format == "json") {
      json j = json::array();
      for (const auto& h : hits) j.push_back(to_json(h));
      out_ << j.dump(2) << '\n';
    } else {
      out_ << hits.size() << " hit(s) for " << parts.size() << " part(s) within "
           << cfg_.max_objects << " object(s), " << cfg_.max_cells << " cell(s) per dimension\n";
      for (std::size_t k = 0; k < hits.size(); ++k) {
        out_ << "hit " << (k + 1) << ": " << category_summary(hits[k]) << '\n';
        describe(hits[k]);
      }
    }
    return 0;
  }

 private:
  void formats(std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed) {
      if (cfg_.format == f) return;
    }
    throw UsageError("--format " + cfg_.format + " is not available for this command");
  }

  StrictNCategory load_checked() {
    auto c = load_category(cfg_.input);
    const auto report = validate(c);
    if (!report.empty()) {
      if (cfg_.require_valid) {
        for (const auto& v : report) err_ << format_violation(v) << '\n';
        throw Error(Errc::invalid_argument, cfg_.input + " is not a valid strict " +
                                                std::to_string(c.dimension()) + "-category");
      }
      err_ << "warning: " << cfg_.input << " breaks " << report.size()
           << " strict-category law instance(s), first: " << format_violation(report.front())
           << "; continuing\n";
    }
    return c;
  }

  CoefficientSpec coefficient_spec() const {
    if (cfg_.coefficients.rfind("const:", 0) == 0) return CoefficientSpec::shorthand(cfg_.coefficients);
    const std::string text = read_text_file(cfg_.coefficients);
    try {
      return CoefficientSpec::from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw Error(Errc::parse, cfg_.coefficients + ": " + e.what());
    }
  }

  std::vector<StrictNCategory> read_parts() const {
    const std::string text = read_text_file(cfg_.input);
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(Errc::parse, cfg_.input + ": " + e.what());
    }
    std::vector<StrictNCategory> parts;
    if (doc.is_object() && doc.contains("parts")) {
      const fs::path base = fs::path(cfg_.input).parent_path();
      for (const auto& p : doc["parts"]) {
        parts.push_back(p.is_string() ? load_category(base / p.get<std::string>())
                                      : parse_category(p));
      }
      return parts;
    }
    const auto c = parse_category(doc);
    for (auto& part : shift(c)) parts.push_back(std::move(part.category));
    return parts;
  }

  void describe(const StrictNCategory& c) {
    for (int d = 1; d <= c.dimension(); ++d) {
      for (CellId x : c.cells_of_dim(d)) {
        if (c.is_identity_cell(x)) continue;
        out_ << "  " << c.name(x) << " : " << c.name(*c.cell(x).src) << " -> "
             << c.name(*c.cell(x).tgt) << '\n';
      }
    }
    for (int j = 0; j < c.dimension(); ++j) {
      std::vector<std::string> lines;
      c.for_each_composite(j, [&](CellId a, CellId b, CellId r) {
        if (c.is_identity_cell(a) || c.is_identity_cell(b)) return;
        lines.push_back("  " + c.name(b) + " o" + std::to_string(j) + " " + c.name(a) + " = " +
                        c.name(r));
      });
      std::sort(lines.begin(), lines.end());
      for (const auto& l : lines) out_ << l << '\n';
    }
  }

  const Config& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

int exit_code(Errc code) {
  switch (code) {
    case Errc::parse:
    case Errc::dangling_reference:
    case Errc::duplicate_id:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Factorise finite strict n-categories and compute Thomason cohomology", "ncat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_flag("--require-valid", cfg.require_valid, "Refuse inputs that break the category laws");

  auto* validate_cmd = app.add_subcommand("validate", "Check the strict n-category laws");
  validate_cmd->add_option("file", cfg.input)->required();

  auto* shift_cmd = app.add_subcommand("shift", "List the parts of the k-fold shift");
  shift_cmd->add_option("file", cfg.input)->required();
  shift_cmd->add_option("--times", cfg.times, "Number of shifts")->capture_default_str();

  auto* tree_cmd = app.add_subcommand("tree", "Factorisation tree");
  tree_cmd->add_option("file", cfg.input)->required();
  auto* plane_cmd = app.add_subcommand("plane", "Factorisation plane");
  plane_cmd->add_option("file", cfg.input)->required();
  auto* shape_cmd = app.add_subcommand("shape", "Shape tree");
  shape_cmd->add_option("file", cfg.input)->required();

  auto* iso_cmd = app.add_subcommand("iso", "Search for an isomorphism A -> B");
  iso_cmd->add_option("a", cfg.input)->required();
  iso_cmd->add_option("b", cfg.other)->required();

  auto* coh_cmd = app.add_subcommand("cohomology", "Thomason cohomology");
  coh_cmd->add_option("file", cfg.input)->required();
  coh_cmd->add_option("--degree", cfg.degree, "Cohomological degree n")->required();
  coh_cmd->add_option("--coefficients", cfg.coefficients,
                      "const:Z, const:Z/m or a coefficient JSON file")
      ->capture_default_str();
  coh_cmd->add_flag("--tree", cfg.tree, "Compute at every plane vertex");
  coh_cmd->add_option("--convention", cfg.convention, "Differential convention")
      ->check(CLI::IsMember({"full", "paper"}))
      ->capture_default_str();
  coh_cmd->add_flag("--paper-differential", cfg.paper_differential,
                    "Shorthand for --convention paper");
  coh_cmd->add_option("--max-degree", cfg.max_degree, "Degree bound N (default max(4, n+1))");

  auto* search_cmd = app.add_subcommand("search-embeddings",
                                        "2-categories whose shift matches a parts collection");
  search_cmd->add_option("file", cfg.input, "{\"parts\": [...]} file or a 2-category")->required();
  search_cmd->add_option("--max-objects", cfg.max_objects)->capture_default_str();
  search_cmd->add_option("--max-cells", cfg.max_cells, "Non-identity cells per dimension")
      ->capture_default_str();
  search_cmd->add_option("--output-dir", cfg.output_dir, "Write each hit as a category file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Runner runner(cfg, out, err);
  try {
    if (validate_cmd->parsed()) return runner.validate_cmd();
    if (shift_cmd->parsed()) return runner.shift_cmd();
    if (tree_cmd->parsed()) return runner.tree_cmd(false);
    if (plane_cmd->parsed()) return runner.tree_cmd(true);
    if (shape_cmd->parsed()) return runner.shape_cmd();
    if (iso_cmd->parsed()) return runner.iso_cmd();
    if (coh_cmd->parsed()) return runner.cohomology_cmd();
    if (search_cmd->parsed()) return runner.search_cmd();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code(e.code());
  }
  return 2;
}

}  // namespace ncat::cli
