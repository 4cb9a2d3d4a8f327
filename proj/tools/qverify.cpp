#include "qseries/catalog.hpp"
#include "qseries/errors.hpp"
#include "qseries/verify.hpp"

#include <CLI11.hpp>

#include <fnmatch.h>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace qseries;

int main(int argc, char** argv)
{
    CLI::App app{"Verify q-series identities coefficient by coefficient"};
    std::optional<long> order;
    std::vector<std::string> files;
    bool catalog = false, list = false;
    std::string name_glob, json_path;
    unsigned jobs = 1;
    app.add_option("--order", order, "truncation order for every identity")->check(CLI::PositiveNumber);
    app.add_option("--file", files, "identity file (repeatable)")->check(CLI::ExistingFile);
    app.add_flag("--catalog", catalog, "include the builtin suite");
    app.add_option("--name", name_glob, "only identities whose name matches this glob");
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--json", json_path, "write a JSON report");
    app.add_flag("--list", list, "list the selected identities and exit");
    CLI11_PARSE(app, argc, argv);

    std::vector<IdentityRecord> records;
    try {
        if (catalog || files.empty()) records = builtin_suite();
        for (auto& f : files) {
            std::ifstream in(f);
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                auto more = parse_identities(ss.str());
                records.insert(records.end(), more.begin(), more.end());
            } catch (const ParseError& e) {
                std::cerr << f << ":" << e.what() << "\n";
                return 2;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::set<std::string> seen;
    for (auto& r : records)
        if (!seen.insert(r.name).second) {
            std::cerr << "error: duplicate identity name " << r.name << "\n";
            return 2;
        }

    if (!name_glob.empty())
        std::erase_if(records, [&](const IdentityRecord& r) { return fnmatch(name_glob.c_str(), r.name.c_str(), 0) != 0; });

    if (list) {
        for (auto& r : records) std::cout << to_string(r) << "\n";
        return 0;
    }
    if (records.empty()) std::cerr << "warning: no identities selected\n";

    RunOptions opt;
    opt.order_override = order;
    opt.jobs = jobs;
    auto reports = run_suite(records, opt);
    std::cout << reports_table(reports);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << reports_json(reports);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
    }
    return exit_code(reports);
}
