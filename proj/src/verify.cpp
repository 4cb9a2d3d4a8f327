#include "qseries/verify.hpp"
#include "qseries/errors.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

namespace qseries {

const char* status_name(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    default:
        return "error";
    }
}

VerificationReport verify_identity(const IdentityRecord& r, const RunOptions& opt)
{
    VerificationReport rep;
    rep.name = r.name;
    rep.order = opt.order_override ? *opt.order_override : r.order ? *r.order : opt.default_order;
    auto t0 = std::chrono::steady_clock::now();
    try {
        QSeries lhs = eval_expr(r.lhs, rep.order);
        QSeries rhs = eval_expr(r.rhs, rep.order);
        // both sides are known below the requested order, so compare there
        QSeries diff = (lhs - rhs).truncated(rep.order);
        if (auto v = diff.valuation()) {
            rep.status = Status::Fail;
            rep.first_mismatch = *v;
            rep.lhs_coeff = lhs.coeff_at(*v).to_string();
            rep.rhs_coeff = rhs.coeff_at(*v).to_string();
            rep.message = "first mismatch at q^" + v->get_str();
        } else {
            rep.status = Status::Pass;
        }
    } catch (const std::exception& e) {
        rep.status = Status::Error;
        rep.message = e.what();
    }
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<VerificationReport> run_suite(const std::vector<IdentityRecord>& rs, const RunOptions& opt)
{
    std::vector<VerificationReport> out(rs.size());
    unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(rs.size())));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < rs.size();) out[i] = verify_identity(rs[i], opt);
    };
    if (jobs <= 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

int exit_code(const std::vector<VerificationReport>& reports)
{
    int code = 0;
    for (auto& r : reports) {
        if (r.status == Status::Error) return 2;
        if (r.status == Status::Fail) code = 1;
    }
    return code;
}

std::string reports_json(const std::vector<VerificationReport>& reports)
{
    using json = nlohmann::ordered_json;
    json arr = json::array();
    auto opt = [](const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); };
    for (auto& r : reports) {
        json o;
        o["name"] = r.name;
        o["status"] = status_name(r.status);
        o["order"] = is_integer(r.order) ? json(r.order.get_num().get_si()) : json(r.order.get_str());
        o["first_mismatch"] = r.first_mismatch ? json(r.first_mismatch->get_str()) : json(nullptr);
        o["lhs_coeff"] = opt(r.lhs_coeff);
        o["rhs_coeff"] = opt(r.rhs_coeff);
        o["message"] = r.message;
        o["ms"] = r.ms;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string reports_table(const std::vector<VerificationReport>& reports)
{
    size_t w = 4;
    for (auto& r : reports) w = std::max(w, r.name.size());
    std::string out;
    char buf[64];
    for (auto& r : reports) {
        std::string line = r.name + std::string(w + 2 - r.name.size(), ' ');
        std::snprintf(buf, sizeof buf, "%-6s N=%-5s %9.1f ms", status_name(r.status), r.order.get_str().c_str(), r.ms);
        line += buf;
        if (r.status == Status::Fail)
            line += "  q^" + r.first_mismatch->get_str() + ": lhs " + *r.lhs_coeff + ", rhs " + *r.rhs_coeff;
        else if (r.status == Status::Error)
            line += "  " + r.message;
        out += line + "\n";
    }
    size_t np = 0, nf = 0, ne = 0;
    for (auto& r : reports) (r.status == Status::Pass ? np : r.status == Status::Fail ? nf : ne)++;
    out += std::to_string(reports.size()) + " identities: " + std::to_string(np) + " pass, " + std::to_string(nf) +
           " fail, " + std::to_string(ne) + " error\n";
    return out;
}

} // namespace qseries
