// Acceptance suite: one pass/fail line per criterion, all at zero tolerance
// (exact arithmetic).  Exit status is nonzero iff any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "qmin/suites.hpp"

namespace {

using qmin::suites::Report;

struct Criterion {
    int id;
    std::string description;
    std::vector<Report> reports;
    bool ok = true;
    long instances = 0;
    double ms = 0;

    Criterion(int i, std::string d) : id(i), description(std::move(d)) {}

    void add(Report r) {
        ok = ok && r.pass();
        instances += r.instances;
        ms += r.duration_ms;
        reports.push_back(std::move(r));
    }
};

void print(const Criterion& c) {
    std::printf("criterion %2d [%s] %s (instances=%ld, %.1f ms)\n", c.id,
                c.ok ? "PASS" : "FAIL", c.description.c_str(), c.instances, c.ms);
    if (!c.ok)
        for (const auto& r : c.reports)
            for (const auto& f : r.failures)
                std::printf("    %s: %s -> %s\n", r.suite.c_str(), f.instance.c_str(),
                            f.residual.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    using namespace qmin::suites;
    std::vector<Criterion> cs;

    {
        Criterion c(1, "Manin relations on the generic 3x3 and 3x4 matrices");
        c.add(run_manin(3, 3));
        c.add(run_manin(3, 4));
        print(c);
        cs.push_back(std::move(c));
    }
    {
        Criterion c(2, "Pluecker family: all instances at 3x3 and 4x4");
        c.add(run_verify_identities(3, 3, Family::Plucker));
        c.add(run_verify_identities(4, 4, Family::Plucker));  // 96 instances, below sample cap
        print(c);
        cs.push_back(std::move(c));
    }
    {
        Criterion c(3, "co-Pluecker family: all instances at 3x3 and 4x4");
        c.add(run_verify_identities(3, 3, Family::CoPlucker));
        c.add(run_verify_identities(4, 4, Family::CoPlucker));
        print(c);
        cs.push_back(std::move(c));
    }
    {
        Criterion c(4, "Dodgson family for m=n<=4, plus the verbatim 2x2 base case");
        for (int s = 2; s <= 4; ++s) c.add(run_verify_identities(s, s, Family::Dodgson));
        c.add(run_dodgson_base(4, 4));
        print(c);
        cs.push_back(std::move(c));
    }
    {
        Criterion c(5, "interval quasi-commutation verdicts confirmed by PBW at 3x3");
        c.add(run_verify_identities(3, 3, Family::QC));
        print(c);
        cs.push_back(std::move(c));
    }
    {
        Criterion c(6, "Lindstrom: path-matrix minors equal flow sums for m,n<=3");
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) c.add(run_lindstrom(m, n));
        print(c);
        cs.push_back(std::move(c));
    }
    {
        Criterion c(7, "path-matrix entries satisfy Manin relations at 3x3");
        c.add(run_path_manin(3, 3));
        print(c);
        cs.push_back(std::move(c));
    }
    {
        Criterion c(8, "exponent calculus d = c1-c2-c3+c4 = phi+psi with case table, m,n<=4");
        c.add(run_exponent_calculus(4, 4));
        print(c);
        cs.push_back(std::move(c));
    }
    {
        Criterion c(9, "extension pipeline: wcast, restriction, families on the table, m,n<=3");
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) c.add(run_extend(m, n));
        print(c);
        cs.push_back(std::move(c));
    }
    {
        Criterion c(10, "reconstruction reproduces the extended table exactly, m,n<=3");
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) c.add(run_reconstruct(m, n));
        print(c);
        cs.push_back(std::move(c));
    }
    {
        Criterion c(11, "property suites: PBW confluence, torus associativity, division");
        c.add(run_pbw_confluence(1000, 20250809));
        c.add(run_torus_associativity(1000, 20250810));
        c.add(run_division_roundtrip(1000, 20250811));
        print(c);
        cs.push_back(std::move(c));
    }

    int failed = 0;
    for (const auto& c : cs)
        if (!c.ok) ++failed;
    if (failed) {
        std::printf("%d criterion(s) failed\n", failed);
        return 1;
    }
    std::printf("all %zu criteria passed\n", cs.size());
    return 0;
}
