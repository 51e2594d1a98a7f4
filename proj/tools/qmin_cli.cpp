// Command-line driver for the verification suites.  Every subcommand prints
// a JSON report on stdout (or to --json-out) and a one-line summary on
// stderr; the exit status is nonzero iff the suite recorded any failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qmin/errors.hpp"
#include "qmin/suites.hpp"

namespace {

struct CommonOpts {
    int m = 3;
    int n = 3;
    int cap = 4;
};

void add_common(CLI::App* cmd, CommonOpts& o, std::string& json_out) {
    cmd->add_option("--m", o.m, "row count")->capture_default_str();
    cmd->add_option("--n", o.n, "column count")->capture_default_str();
    cmd->add_option("--cap", o.cap, "size cap for m and n")->capture_default_str();
    cmd->add_option("--json-out", json_out,
                    "write the JSON report to a file instead of stdout");
}

void check_cap(const CommonOpts& o) {
    if (o.m < 1 || o.n < 1) throw qmin::CapExceeded("m and n must be at least 1");
    if (o.cap > 4)
        std::cerr << "warning: cap " << o.cap
                  << " exceeds the default 4; large sizes may take a long time\n";
    if (o.m > o.cap || o.n > o.cap)
        throw qmin::CapExceeded("m=" + std::to_string(o.m) + ", n=" + std::to_string(o.n) +
                                " exceeds cap " + std::to_string(o.cap) +
                                " (raise with --cap)");
}

int emit(const qmin::suites::Report& r, const std::string& json_out) {
    const auto j = r.to_json();
    if (json_out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(json_out);
        if (!f) {
            std::cerr << "error: cannot write " << json_out << "\n";
            return 2;
        }
        f << j.dump(2) << "\n";
    }
    std::cerr << "suite " << r.suite << ": " << r.instances << " instances, "
              << r.failures.size() << " failures, " << r.duration_ms << " ms ["
              << (r.pass() ? "PASS" : "FAIL") << "]\n";
    return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of quadratic identities on quantum minors"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string json_out;
    std::string family = "all";
    std::string expr_file;
    auto* verify = app.add_subcommand(
        "verify-identities", "evaluate identity families on the generic quantum matrix");
    add_common(verify, opts, json_out);
    verify->add_option("--family", family, "plucker|coplucker|dodgson|qc|all")
        ->capture_default_str();

    auto* lind = app.add_subcommand("lindstrom",
                                    "compare path-matrix minors with flow-weight sums");
    add_common(lind, opts, json_out);

    std::string table_out;
    auto* ext = app.add_subcommand(
        "extend", "extend generic pressed values to a full table and verify it");
    add_common(ext, opts, json_out);
    ext->add_option("--table-out", table_out,
                    "also write the extended table as JSON (cortege -> element)");

    auto* rec = app.add_subcommand(
        "reconstruct", "rebuild the extended table from its pressed restriction");
    add_common(rec, opts, json_out);
    rec->add_option("--table-out", table_out,
                    "also write the reconstructed table as JSON (cortege -> element)");

    auto* eval = app.add_subcommand("eval", "evaluate a QI expression file");
    add_common(eval, opts, json_out);
    eval->add_option("--expr-file", expr_file, "file holding one QI expression")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            check_cap(opts);
            const auto fam = qmin::suites::family_from_string(family);
            if (!fam) {
                std::cerr << "error: unknown family '" << family << "'\n";
                return 2;
            }
            return emit(qmin::suites::run_verify_identities(opts.m, opts.n, *fam), json_out);
        }
        if (lind->parsed()) {
            check_cap(opts);
            return emit(qmin::suites::run_lindstrom(opts.m, opts.n), json_out);
        }
        if (ext->parsed()) {
            check_cap(opts);
            if (!table_out.empty()) {
                const auto table = qmin::extend_f0(qmin::PressedAssignment::generic(opts.m, opts.n));
                std::ofstream f(table_out);
                if (!f) {
                    std::cerr << "error: cannot write " << table_out << "\n";
                    return 2;
                }
                f << table.to_json().dump(2) << "\n";
            }
            return emit(qmin::suites::run_extend(opts.m, opts.n), json_out);
        }
        if (rec->parsed()) {
            check_cap(opts);
            if (!table_out.empty()) {
                const auto pa = qmin::PressedAssignment::generic(opts.m, opts.n);
                const auto table = qmin::extend_f0(pa);
                const auto rebuilt =
                    qmin::reconstruct(table.restrict_pressed(), pa.torus(), opts.m, opts.n);
                std::ofstream f(table_out);
                if (!f) {
                    std::cerr << "error: cannot write " << table_out << "\n";
                    return 2;
                }
                f << rebuilt.to_json().dump(2) << "\n";
            }
            return emit(qmin::suites::run_reconstruct(opts.m, opts.n), json_out);
        }
        if (eval->parsed()) {
            check_cap(opts);
            std::ifstream f(expr_file);
            if (!f) {
                std::cerr << "error: cannot read " << expr_file << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            return emit(qmin::suites::run_eval(buf.str(), opts.m, opts.n), json_out);
        }
    } catch (const qmin::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const qmin::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qmin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
