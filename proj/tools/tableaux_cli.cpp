// Command-line front end; talks to the library only through the C API.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tableaux/tableaux.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_catalog(const std::string& source) { return source.rfind("catalog:", 0) == 0; }

std::string catalog_name(const std::string& source) { return source.substr(8); }

std::string own(char* s) {
  std::string out(s);
  tbx_string_free(s);
  return out;
}

[[noreturn]] void raise(tbx_status status) {
  throw InputError(std::string(tbx_status_name(status)) + ": " + tbx_last_error());
}

void check(tbx_status status) {
  if (status != TBX_OK) raise(status);
}

std::string read_source(const std::string& source) {
  if (is_catalog(source)) {
    char* json = nullptr;
    check(tbx_catalog_export(catalog_name(source).c_str(), &json));
    return own(json);
  }
  std::ostringstream buf;
  if (source == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(source);
    if (!in) throw InputError("cannot open input file '" + source + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

struct TableauHandle {
  tbx_tableau* p = nullptr;
  explicit TableauHandle(const std::string& source) {
    check(tbx_tableau_from_json(read_source(source).c_str(), &p));
  }
  ~TableauHandle() { tbx_tableau_free(p); }
};

struct LieTableauHandle {
  tbx_lie_tableau* p = nullptr;
  explicit LieTableauHandle(const std::string& source) {
    if (is_catalog(source))
      check(tbx_lie_tableau_from_catalog(catalog_name(source).c_str(), &p));
    else
      check(tbx_lie_tableau_from_json(read_source(source).c_str(), &p));
  }
  ~LieTableauHandle() { tbx_lie_tableau_free(p); }
};

struct Settings {
  tbx_options opts;
  std::string format = "text";
  std::string mode;
};

using ReportFn = std::function<tbx_status(tbx_report**)>;

int emit(const Settings& s, const ReportFn& make) {
  tbx_report* r = nullptr;
  const tbx_status status = make(&r);
  if (status == TBX_ERR_NOT_CERTIFIED) {
    std::cerr << "not certified: " << tbx_last_error() << "\n";
    return kExitVerification;
  }
  if (status != TBX_OK) raise(status);
  std::cout << (s.format == "json" ? tbx_report_json(r) : tbx_report_text(r));
  const int code = tbx_report_verified(r) ? kExitOk : kExitVerification;
  tbx_report_free(r);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tableaux, Spencer cohomology and Pfaffian systems over Lie algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tbx_version()));

  Settings s;
  tbx_options_default(&s.opts);
  int trials = static_cast<int>(s.opts.trials);
  app.add_option("--seed", s.opts.seed, "seed for generic flags and sample points")->capture_default_str();
  app.add_option("--trials", trials, "random flags per character computation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--entry-bound", s.opts.entry_bound, "bound on random flag entries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--q-max", s.opts.q_max, "cohomology and 2-acyclicity window")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--h-max", s.opts.h_max, "highest prolongation order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  bool force = false;
  app.add_flag("--force", force, "build systems even when certification fails");
  app.add_option("--mode", s.mode, "certification mode (overrides the input)")
      ->check(CLI::IsMember({"involutive", "2acyclic"}));

  std::string input;
  std::function<int()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  bool takes_input, std::function<int()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    if (takes_input) sub->add_option("input", input, "JSON file, '-' for stdin, or catalog:NAME")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* tableau = app.add_subcommand("tableau", "tableau computations");
  tableau->require_subcommand(1)->fallthrough();
  auto on_tableau = [&](auto fn) {
    return [&, fn] {
      TableauHandle t(input);
      return emit(s, [&](tbx_report** r) { return fn(t.p, &s.opts, r); });
    };
  };
  leaf(tableau, "characters", "characters along generic flags", true, on_tableau(tbx_report_tableau_characters));
  leaf(tableau, "prolong", "prolongations up to --h-max", true, on_tableau(tbx_report_tableau_prolong));
  leaf(tableau, "cartan-test", "Cartan test for involutivity", true, on_tableau(tbx_report_tableau_cartan_test));
  leaf(tableau, "cohomology", "Spencer cohomology dimensions up to --q-max", true,
       on_tableau(tbx_report_tableau_cohomology));

  auto* lie = app.add_subcommand("lie", "Lie algebra checks");
  lie->require_subcommand(1)->fallthrough();
  leaf(lie, "validate", "Jacobi identity and Killing form", true, [&] {
    const std::string text = read_source(input);
    return emit(s, [&](tbx_report** r) { return tbx_report_lie_validate(text.c_str(), &s.opts, r); });
  });

  auto on_lie_tableau = [&](auto fn) {
    return [&, fn] {
      LieTableauHandle lt(input);
      return emit(s, [&](tbx_report** r) { return fn(lt.p, &s.opts, r); });
    };
  };
  auto* lt = app.add_subcommand("lie-tableau", "tableaux over Lie algebras");
  lt->require_subcommand(1)->fallthrough();
  leaf(lt, "certify", "conditions (1) and (2)", true, on_lie_tableau(tbx_report_certify));

  auto* pds = app.add_subcommand("pds", "the associated Pfaffian system");
  pds->require_subcommand(1)->fallthrough();
  leaf(pds, "build", "structure equations and torsion", true, on_lie_tableau(tbx_report_pds_build));
  leaf(pds, "verify", "linearity, torsion, read-back and characters", true, on_lie_tableau(tbx_report_pds_verify));
  leaf(pds, "tower", "prolongation tower up to --h-max", true, on_lie_tableau(tbx_report_pds_tower));

  auto* gg0 = app.add_subcommand("gg0", "G/G0-system export");
  gg0->require_subcommand(1)->fallthrough();
  leaf(gg0, "export", "coefficients of the G/G0-system of a Cartan tableau", true,
       on_lie_tableau(tbx_report_gg0_export));

  auto* catalog = app.add_subcommand("catalog", "built-in examples");
  catalog->require_subcommand(1)->fallthrough();
  leaf(catalog, "list", "entry names", false,
       [&] { return emit(s, [&](tbx_report** r) { return tbx_report_catalog_list(&s.opts, r); }); });
  std::string name;
  auto* show = catalog->add_subcommand("show", "bundle and expectations of one entry");
  show->fallthrough();
  show->add_option("name", name, "entry name")->required();
  show->callback([&] {
    action = [&] {
      return emit(s, [&](tbx_report** r) { return tbx_report_catalog_show(name.c_str(), &s.opts, r); });
    };
  });
  bool all = false;
  auto* verify = catalog->add_subcommand("verify", "certify entries and compare expectations");
  verify->fallthrough();
  verify->add_option("name", name, "entry name");
  verify->add_flag("--all", all, "every entry");
  verify->callback([&] {
    action = [&] {
      if (all == !name.empty()) throw InputError("catalog verify needs either a name or --all");
      return emit(s, [&](tbx_report** r) {
        return tbx_report_catalog_verify(all ? nullptr : name.c_str(), &s.opts, r);
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  s.opts.trials = static_cast<uint32_t>(trials);
  s.opts.force = force ? 1 : 0;
  if (s.mode == "involutive") s.opts.mode = TBX_MODE_INVOLUTIVE;
  if (s.mode == "2acyclic") s.opts.mode = TBX_MODE_TWO_ACYCLIC;

  try {
    return action ? action() : kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
