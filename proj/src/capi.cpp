#include "eala/eala_c.h"

#include <string>

#include "eala/scenario.hpp"

struct eala_report {
  std::string json;
  std::string text;
  eala_status status = EALA_OK;
};

namespace {

thread_local std::string last_error;

eala_status input_error(const std::string& msg) {
  last_error = msg;
  return EALA_INPUT_ERROR;
}

bool is_input(eala::ErrorCode c) {
  return c != eala::ErrorCode::Internal;
}

}  // namespace

extern "C" {

eala_status eala_run_scenarios(const char* json_text, long window, int timing, eala_report** out) {
  last_error.clear();
  if (!json_text || !out) return input_error("null argument");
  *out = nullptr;
  try {
    auto scenarios = eala::scenario::parse_scenarios(json_text);
    eala::scenario::RunOptions opt;
    if (window > 0) opt.window = window;
    opt.timing = timing != 0;
    auto results = eala::scenario::run_all(scenarios, opt);
    auto report = eala::scenario::batch_report(results);
    auto* r = new eala_report;
    r->json = report.dump(2) + "\n";
    r->status = report["status"] == "pass" ? EALA_OK : EALA_CHECK_FAILED;
    *out = r;
    return r->status;
  } catch (const eala::Error& e) {
    if (is_input(e.code())) return input_error(e.what());
    last_error = e.what();
    return EALA_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EALA_INTERNAL_ERROR;
  }
}

eala_status eala_theorem48_table(int max_rank, eala_report** out) {
  last_error.clear();
  if (!out) return input_error("null argument");
  *out = nullptr;
  try {
    auto t = eala::scenario::theorem48_table(max_rank);
    nlohmann::ordered_json o;
    o["kind"] = "theorem48";
    o["max_rank"] = max_rank;
    o["pairs"] = t.pairs;
    o["status"] = t.all_agree ? "pass" : "fail";
    o["rows"] = t.rows;
    auto* r = new eala_report;
    r->json = o.dump(2) + "\n";
    r->text = eala::scenario::render_theorem48(t);
    r->status = t.all_agree ? EALA_OK : EALA_CHECK_FAILED;
    *out = r;
    return r->status;
  } catch (const eala::Error& e) {
    if (is_input(e.code())) return input_error(e.what());
    last_error = e.what();
    return EALA_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EALA_INTERNAL_ERROR;
  }
}

const char* eala_report_json(const eala_report* r) { return r ? r->json.c_str() : ""; }
const char* eala_report_text(const eala_report* r) { return r ? r->text.c_str() : ""; }
eala_status eala_report_status(const eala_report* r) { return r ? r->status : EALA_INPUT_ERROR; }
void eala_report_destroy(eala_report* r) { delete r; }
const char* eala_last_error(void) { return last_error.c_str(); }
const char* eala_version(void) { return "0.1.0"; }

}
