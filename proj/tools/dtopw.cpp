// dtopw: batch front end. Exit codes: 0 pass, 1 property/claim failure,
// 2 usage, parse or bound errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "dtopw/constructions.hpp"
#include "dtopw/errors.hpp"
#include "dtopw/gallery.hpp"
#include "dtopw/io.hpp"
#include "dtopw/suites.hpp"

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    dtopw::write_file(out, text);
  }
}

int cmd_check(const std::string& file, const std::string& property, const std::string& format) {
  const dtopw::FiniteSpace x = dtopw::load_space(file);
  const dtopw::PropertyReport r = dtopw::check_property(x, property);
  if (format == "json") {
    std::cout << json{{"file", file}, {"property", r.property}, {"holds", r.holds}, {"detail", r.detail}}.dump(2)
              << '\n';
  } else {
    std::cout << "CHECK " << r.property << ' ' << file << " -> " << (r.holds ? "true" : "false")
              << " (" << r.detail << ")\n";
  }
  return r.holds ? kPass : kFail;
}

int cmd_suite(dtopw::SuiteConfig config, const std::string& format) {
  const dtopw::SuiteResult r = dtopw::run_suite(config);
  std::string text;
  if (format == "json") {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"instance", f.instance}, {"size", f.size}, {"detail", f.detail}});
    text = json{{"suite", r.id},
                {"max_size", config.max_size},
                {"depth", config.depth},
                {"instances", r.instances},
                {"checks", r.checks},
                {"notes", r.notes},
                {"failures", failures},
                {"passed", r.passed()}}
               .dump(2) +
           "\n";
  } else {
    text = r.summary();
  }
  emit(text, config.out);
  if (!config.out.empty()) std::cout << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return r.passed() ? kPass : kFail;
}

int cmd_export(const std::string& file, const std::string& kind, const std::string& out) {
  std::string dot;
  if (kind == "specialization") {
    dot = dtopw::dot_specialization(dtopw::load_space(file));
  } else if (kind == "openlattice") {
    dot = dtopw::dot_open_lattice(dtopw::load_space(file));
  } else {
    const std::filesystem::path path(file);
    dot = path.extension() == ".poset"
              ? dtopw::dot_hasse(dtopw::parse_poset(dtopw::read_file(path)))
              : dtopw::dot_hasse(dtopw::specialization(dtopw::load_space(file)));
  }
  emit(dot, out);
  return kPass;
}

int cmd_construct(const std::string& kind, const std::string& lhs, const std::string& rhs,
                  const std::string& out) {
  const dtopw::FiniteSpace x = dtopw::load_space(lhs);
  auto right = [&] {
    if (rhs.empty()) throw CLI::ValidationError("--rhs", "required for " + kind);
    return dtopw::load_space(rhs);
  };
  dtopw::FiniteSpace result;
  if (kind == "product") {
    result = dtopw::product(x, right());
  } else if (kind == "tensor") {
    result = dtopw::tensor(x, right());
  } else if (kind == "exponential") {
    result = dtopw::exponential(x, right()).space;
  } else {
    result = dtopw::ideal_completion(x).space;
  }
  emit(dtopw::write_space(result), out);
  return kPass;
}

int cmd_gallery_list(const std::string& format) {
  if (format == "json") {
    json spaces = json::array();
    for (const auto& n : dtopw::gallery_names()) {
      auto s = dtopw::gallery_space(n);
      json schemas = json::array();
      for (const auto& sch : s->schemas()) schemas.push_back(sch.id);
      spaces.push_back({{"name", n}, {"schemas", schemas}});
    }
    std::cout << spaces.dump(2) << '\n';
    return kPass;
  }
  for (const auto& n : dtopw::gallery_names()) {
    auto s = dtopw::gallery_space(n);
    std::cout << n << ':';
    for (const auto& sch : s->schemas()) std::cout << ' ' << sch.id;
    std::cout << '\n';
  }
  return kPass;
}

int cmd_gallery_verify(const std::string& name, int depth, const std::string& format) {
  if (depth < 1 || depth > 12) throw dtopw::BoundExceeded("depth must be in 1..12");
  std::vector<std::string> names;
  if (name == "all") {
    names = dtopw::gallery_names();
  } else {
    names.push_back(name);
  }
  bool ok = true;
  json reports = json::array();
  for (const auto& n : names) {
    const dtopw::GalleryReport r = dtopw::run_gallery_claims(n, depth);
    ok = ok && r.passed();
    if (format == "json") {
      json claims = json::array();
      for (const auto& c : r.claims) {
        claims.push_back({{"id", c.id}, {"expected", c.expected}, {"actual", c.actual}, {"line", c.line}});
      }
      reports.push_back({{"space", r.space}, {"depth", depth}, {"claims", claims}, {"passed", r.passed()}});
    } else {
      std::cout << r.text();
    }
  }
  if (format == "json") std::cout << reports.dump(2) << '\n';
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dtopw: finite T0 spaces, approximation relations and a gallery of countable counterexamples"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string file, property;
  auto* check = app.add_subcommand("check", "Decide a property of a .space or .poset file");
  check->add_option("file", file)->required();
  check->add_option("property", property)->required();

  dtopw::SuiteConfig config;
  config.jobs = dtopw::default_jobs();
  bool list_suites = false;
  auto* suite = app.add_subcommand("suite", "Run an acceptance suite");
  suite->add_option("id", config.id, "Suite id");
  suite->add_flag("--list", list_suites, "List suite ids");
  suite->add_option("--max-size", config.max_size, "Largest poset size (<= 5)");
  suite->add_option("--depth", config.depth, "Gallery depth (<= 12)");
  suite->add_option("--jobs", config.jobs, "Worker threads (default DTOPW_JOBS)");
  suite->add_option("--out", config.out, "Write the report here");
  suite->add_option("--seed", config.seed, "Seed for sampled checks");

  std::string kind, out;
  auto* exp = app.add_subcommand("export", "Export DOT");
  exp->add_option("file", file)->required();
  exp->add_option("kind", kind)->required()->check(CLI::IsMember({"specialization", "openlattice", "hasse"}));
  exp->add_option("--out", out);

  std::string lhs, rhs;
  auto* con = app.add_subcommand("construct", "Build a space and write it as .space");
  con->add_option("kind", kind)->required()->check(CLI::IsMember({"product", "tensor", "exponential", "ideals"}));
  con->add_option("--lhs", lhs)->required();
  con->add_option("--rhs", rhs);
  con->add_option("--out", out);

  std::string name;
  int depth = 10;
  auto* gal = app.add_subcommand("gallery", "Countable counterexample spaces");
  gal->require_subcommand(1);
  auto* glist = gal->add_subcommand("list", "List gallery spaces and their schemas");
  auto* gverify = gal->add_subcommand("verify", "Verify the claim list of a space (or 'all')");
  gverify->add_option("name", name)->required();
  gverify->add_option("--depth", depth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(file, property, format);
    if (*suite) {
      if (list_suites || config.id.empty()) {
        for (const auto& id : dtopw::suite_ids()) std::cout << id << '\n';
        return list_suites ? kPass : kUsage;
      }
      return cmd_suite(config, format);
    }
    if (*exp) return cmd_export(file, kind, out);
    if (*con) return cmd_construct(kind, lhs, rhs, out);
    if (*glist) return cmd_gallery_list(format);
    if (*gverify) return cmd_gallery_verify(name, depth, format);
  } catch (const dtopw::ClaimFailed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  } catch (const dtopw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
