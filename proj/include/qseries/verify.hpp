#pragma once

#include "qseries/expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qseries {

enum class Status { Pass, Fail, Error };
const char* status_name(Status s);

struct VerificationReport {
    std::string name;
    Status status = Status::Error;
    BigRat order;
    std::optional<BigRat> first_mismatch;
    std::optional<std::string> lhs_coeff, rhs_coeff;
    std::string message;
    double ms = 0;
};

struct RunOptions {
    long default_order = 100;
    std::optional<long> order_override; // wins over per-identity orders
    unsigned jobs = 1;
};

// order: override, else the record's own, else the default
VerificationReport verify_identity(const IdentityRecord& r, const RunOptions& opt = {});
// results in input order regardless of jobs
std::vector<VerificationReport> run_suite(const std::vector<IdentityRecord>& rs, const RunOptions& opt = {});

// 0 all pass, 1 any fail, 2 any error
int exit_code(const std::vector<VerificationReport>& reports);
std::string reports_json(const std::vector<VerificationReport>& reports);
std::string reports_table(const std::vector<VerificationReport>& reports);

} // namespace qseries
