#include "tableaux/tableaux.h"

#include <cstring>
#include <string>

#include "error.hpp"
#include "io/reports.hpp"

struct tbx_tableau {
  tbx::Tableau value;
};

struct tbx_lie_tableau {
  tbx::LieTableau value;
  bool keep_a_basis = false;
};

struct tbx_report {
  std::string json;
  std::string text;
  bool verified = true;
};

namespace {

thread_local std::string last_error;

tbx_status status_of(tbx::ErrorCode code) {
  using tbx::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TBX_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return TBX_ERR_PARSE;
    case ErrorCode::DimensionMismatch: return TBX_ERR_DIMENSION_MISMATCH;
    case ErrorCode::UnknownName: return TBX_ERR_UNKNOWN_NAME;
    case ErrorCode::GenericityUnstable: return TBX_ERR_GENERICITY_UNSTABLE;
    case ErrorCode::JacobiViolation: return TBX_ERR_JACOBI_VIOLATION;
    case ErrorCode::NotComplementary: return TBX_ERR_NOT_COMPLEMENTARY;
    case ErrorCode::NotAbelian: return TBX_ERR_NOT_ABELIAN;
    case ErrorCode::NotInDecomposition: return TBX_ERR_NOT_IN_DECOMPOSITION;
    case ErrorCode::NotSemisimple: return TBX_ERR_NOT_SEMISIMPLE;
    case ErrorCode::NotInvolutive: return TBX_ERR_NOT_INVOLUTIVE;
    case ErrorCode::NotCartan: return TBX_ERR_NOT_CARTAN;
    case ErrorCode::NotCertified: return TBX_ERR_NOT_CERTIFIED;
    case ErrorCode::Internal: return TBX_ERR_INTERNAL;
  }
  return TBX_ERR_INTERNAL;
}

template <class F>
tbx_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return TBX_OK;
  } catch (const tbx::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return TBX_ERR_INTERNAL;
  }
}

void require_ptr(const void* p, const char* what) {
  if (p == nullptr) tbx::fail(tbx::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

tbx::RunConfig config(const tbx_options* opts, const char* command) {
  tbx_options o;
  tbx_options_default(&o);
  if (opts != nullptr) o = *opts;
  tbx::require(o.trials >= 1, tbx::ErrorCode::InvalidArgument, "trials must be >= 1");
  tbx::require(o.entry_bound >= 1, tbx::ErrorCode::InvalidArgument, "entry bound must be >= 1");
  tbx::require(o.q_max >= 1, tbx::ErrorCode::InvalidArgument, "q_max must be >= 1");
  tbx::require(o.h_max >= 0, tbx::ErrorCode::InvalidArgument, "h_max must be >= 0");
  tbx::RunConfig cfg;
  cfg.command = command;
  cfg.genericity.seed = o.seed;
  cfg.genericity.trials = o.trials;
  cfg.genericity.entry_bound = o.entry_bound;
  cfg.q_max = o.q_max;
  cfg.h_max = o.h_max;
  cfg.force = o.force != 0;
  if (o.mode == TBX_MODE_INVOLUTIVE) cfg.mode = tbx::CertifyMode::Involutive;
  if (o.mode == TBX_MODE_TWO_ACYCLIC) cfg.mode = tbx::CertifyMode::TwoAcyclic;
  return cfg;
}

void emit(const tbx::Report& r, tbx_report** out) {
  auto* rep = new tbx_report;
  rep->json = r.json.dump(2) + "\n";
  rep->text = tbx::render_text(r.json);
  rep->verified = r.verified;
  *out = rep;
}

template <class F>
tbx_status report(tbx_report** out, F&& make) {
  return guard([&] {
    require_ptr(out, "output pointer");
    *out = nullptr;
    emit(make(), out);
  });
}

char* copy_string(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* tbx_version(void) { return tbx::kLibraryVersion; }

const char* tbx_status_name(tbx_status status) {
  switch (status) {
    case TBX_OK: return "ok";
    case TBX_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case TBX_ERR_PARSE: return "parse";
    case TBX_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case TBX_ERR_UNKNOWN_NAME: return "unknown_name";
    case TBX_ERR_GENERICITY_UNSTABLE: return "genericity_unstable";
    case TBX_ERR_JACOBI_VIOLATION: return "jacobi_violation";
    case TBX_ERR_NOT_COMPLEMENTARY: return "not_complementary";
    case TBX_ERR_NOT_ABELIAN: return "not_abelian";
    case TBX_ERR_NOT_IN_DECOMPOSITION: return "not_in_decomposition";
    case TBX_ERR_NOT_SEMISIMPLE: return "not_semisimple";
    case TBX_ERR_NOT_INVOLUTIVE: return "not_involutive";
    case TBX_ERR_NOT_CARTAN: return "not_cartan";
    case TBX_ERR_NOT_CERTIFIED: return "not_certified";
    case TBX_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* tbx_last_error(void) { return last_error.c_str(); }

void tbx_options_default(tbx_options* opts) {
  if (opts == nullptr) return;
  opts->seed = 1;
  opts->trials = 5;
  opts->entry_bound = 10;
  opts->q_max = 4;
  opts->h_max = 4;
  opts->force = 0;
  opts->mode = TBX_MODE_FROM_INPUT;
}

tbx_status tbx_tableau_from_json(const char* json, tbx_tableau** out) {
  return guard([&] {
    require_ptr(json, "json");
    require_ptr(out, "output pointer");
    *out = nullptr;
    auto t = tbx::tableau_from_any(tbx::parse_json_text(json, "tableau input"));
    *out = new tbx_tableau{std::move(t)};
  });
}

void tbx_tableau_free(tbx_tableau* t) { delete t; }

size_t tbx_tableau_dim(const tbx_tableau* t) { return t == nullptr ? 0 : t->value.dim(); }

tbx_status tbx_tableau_characters(const tbx_tableau* t, const tbx_options* opts, size_t* s_out,
                                  size_t cap, size_t* count) {
  return guard([&] {
    require_ptr(t, "tableau");
    const auto c = tbx::characters(t->value, config(opts, "tableau characters").genericity);
    if (count != nullptr) *count = c.s.size();
    for (std::size_t i = 0; i < c.s.size() && i < cap && s_out != nullptr; ++i) s_out[i] = c.s[i];
  });
}

tbx_status tbx_lie_tableau_from_json(const char* json, tbx_lie_tableau** out) {
  return guard([&] {
    require_ptr(json, "json");
    require_ptr(out, "output pointer");
    *out = nullptr;
    const auto j = tbx::parse_json_text(json, "lie tableau input");
    auto lt = tbx::lie_tableau_from_json(j);
    bool keep = false;
    if (auto it = j.find("catalog"); it != j.end() && it->is_object()) {
      if (auto k = it->find("keep_a_basis"); k != it->end() && k->is_boolean()) keep = k->get<bool>();
    }
    *out = new tbx_lie_tableau{std::move(lt), keep};
  });
}

tbx_status tbx_lie_tableau_from_catalog(const char* name, tbx_lie_tableau** out) {
  return guard([&] {
    require_ptr(name, "name");
    require_ptr(out, "output pointer");
    *out = nullptr;
    auto e = tbx::catalog_get(name);
    *out = new tbx_lie_tableau{std::move(e.lie_tableau), e.keep_a_basis};
  });
}

void tbx_lie_tableau_free(tbx_lie_tableau* lt) { delete lt; }

tbx_status tbx_catalog_export(const char* name, char** json_out) {
  return guard([&] {
    require_ptr(name, "name");
    require_ptr(json_out, "output pointer");
    *json_out = copy_string(tbx::catalog_entry_to_json(tbx::catalog_get(name)).dump(2) + "\n");
  });
}

void tbx_string_free(char* s) { delete[] s; }

tbx_status tbx_report_tableau_characters(const tbx_tableau* t, const tbx_options* opts,
                                         tbx_report** out) {
  return report(out, [&] {
    require_ptr(t, "tableau");
    return tbx::tableau_characters_report(t->value, config(opts, "tableau characters"));
  });
}

tbx_status tbx_report_tableau_prolong(const tbx_tableau* t, const tbx_options* opts,
                                      tbx_report** out) {
  return report(out, [&] {
    require_ptr(t, "tableau");
    return tbx::tableau_prolong_report(t->value, config(opts, "tableau prolong"));
  });
}

tbx_status tbx_report_tableau_cartan_test(const tbx_tableau* t, const tbx_options* opts,
                                          tbx_report** out) {
  return report(out, [&] {
    require_ptr(t, "tableau");
    return tbx::tableau_cartan_test_report(t->value, config(opts, "tableau cartan-test"));
  });
}

tbx_status tbx_report_tableau_cohomology(const tbx_tableau* t, const tbx_options* opts,
                                         tbx_report** out) {
  return report(out, [&] {
    require_ptr(t, "tableau");
    return tbx::tableau_cohomology_report(t->value, config(opts, "tableau cohomology"));
  });
}

tbx_status tbx_report_lie_validate(const char* json, const tbx_options* opts, tbx_report** out) {
  return report(out, [&] {
    require_ptr(json, "json");
    return tbx::lie_validate_report(tbx::parse_json_text(json, "lie algebra input"),
                                    config(opts, "lie validate"));
  });
}

tbx_status tbx_report_certify(const tbx_lie_tableau* lt, const tbx_options* opts,
                              tbx_report** out) {
  return report(out, [&] {
    require_ptr(lt, "lie tableau");
    return tbx::certify_report(lt->value, config(opts, "lie-tableau certify"));
  });
}

tbx_status tbx_report_pds_build(const tbx_lie_tableau* lt, const tbx_options* opts,
                                tbx_report** out) {
  return report(out, [&] {
    require_ptr(lt, "lie tableau");
    return tbx::pds_build_report(lt->value, config(opts, "pds build"), lt->keep_a_basis);
  });
}

tbx_status tbx_report_pds_verify(const tbx_lie_tableau* lt, const tbx_options* opts,
                                 tbx_report** out) {
  return report(out, [&] {
    require_ptr(lt, "lie tableau");
    return tbx::pds_verify_report(lt->value, config(opts, "pds verify"), lt->keep_a_basis);
  });
}

tbx_status tbx_report_pds_tower(const tbx_lie_tableau* lt, const tbx_options* opts,
                                tbx_report** out) {
  return report(out, [&] {
    require_ptr(lt, "lie tableau");
    return tbx::pds_tower_report(lt->value, config(opts, "pds tower"));
  });
}

tbx_status tbx_report_gg0_export(const tbx_lie_tableau* lt, const tbx_options* opts,
                                 tbx_report** out) {
  return report(out, [&] {
    require_ptr(lt, "lie tableau");
    return tbx::gg0_export_report(lt->value, config(opts, "gg0 export"));
  });
}

tbx_status tbx_report_catalog_list(const tbx_options* opts, tbx_report** out) {
  return report(out, [&] { return tbx::catalog_list_report(config(opts, "catalog list")); });
}

tbx_status tbx_report_catalog_show(const char* name, const tbx_options* opts, tbx_report** out) {
  return report(out, [&] {
    require_ptr(name, "name");
    return tbx::catalog_show_report(name, config(opts, "catalog show"));
  });
}

tbx_status tbx_report_catalog_verify(const char* name, const tbx_options* opts,
                                     tbx_report** out) {
  return report(out, [&] {
    const auto names =
        name == nullptr ? tbx::catalog_names() : std::vector<std::string>{std::string(name)};
    return tbx::catalog_verify_report(names, config(opts, "catalog verify"));
  });
}

int tbx_report_verified(const tbx_report* r) { return r != nullptr && r->verified ? 1 : 0; }
const char* tbx_report_json(const tbx_report* r) { return r == nullptr ? "" : r->json.c_str(); }
const char* tbx_report_text(const tbx_report* r) { return r == nullptr ? "" : r->text.c_str(); }
void tbx_report_free(tbx_report* r) { delete r; }

}  // extern "C"
