#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"
#include "liouk/model.hpp"

namespace liouk {

// One verified quantity: what was measured, what it should be, and on what
// grounds the expectation rests ("closed_form", "analytic_identity",
// "convergence_theory", "cross_check", "bessel_zero", "frozen_constant").
struct CheckRecord {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json measured;
    nlohmann::json expected;
    std::string basis;
    bool pass = false;
    double wall_ms = 0.0;
};

// Schema "report-v1": run configuration, gating checks, non-gating diagnostics.
struct SuiteReport {
    std::string version = "report-v1";
    nlohmann::json config = nlohmann::json::object();
    std::vector<CheckRecord> checks;
    std::vector<CheckRecord> diagnostics;

    bool overall_pass() const;
};

nlohmann::json to_json(const CheckRecord& rec);
nlohmann::json to_json(const SuiteReport& report);

// Flat table: kind,name,basis,pass,wall_ms plus the union of dotted keys from
// params/measured/expected in first-seen order; one trailing summary row.
std::string to_csv(const SuiteReport& report);

// format is "json" or "csv"; path "-" (or empty) writes to stdout.
void write_report(const SuiteReport& report, const std::string& path,
                  const std::string& format);

nlohmann::json complex_json(cplx z);

class WallTimer {
  public:
    WallTimer() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         t0_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point t0_;
};

} // namespace liouk
