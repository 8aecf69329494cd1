#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <ctmac/aflt.hpp>
#include <ctmac/cli.hpp>
#include <ctmac/errors.hpp>
#include <ctmac/props.hpp>

using namespace ctmac;

namespace
{

struct Tally {
    long total = 0;
    long failed = 0;
    long refused = 0;
    std::vector<std::string> failures;

    void add(const Report &r)
    {
        ++total;
        refused += r.refused ? 1 : 0;
        if (r.failed()) {
            ++failed;
            if (failures.size() < 10) {
                failures.push_back(report_text(r));
            }
        }
    }
    void add(const std::vector<Report> &rs)
    {
        for (const Report &r : rs) {
            add(r);
        }
    }
    void fail(const std::string &why)
    {
        ++total;
        ++failed;
        failures.push_back(why);
    }
};

AfltParams point(int n, int a, int b, int c, const Partition &lam, const Partition &mu)
{
    AfltParams p;
    p.n = n;
    p.a = a;
    p.b = b;
    p.c = c;
    p.lambda = lam;
    p.mu = mu;
    return p;
}

// The parameter box of the main identity sweep, plus the n = 3 spot set.
std::vector<AfltParams> identity_points()
{
    std::vector<AfltParams> pts;
    const auto small = enumerate(2);
    for (int n = 1; n <= 2; ++n) {
        for (const Partition &lam : small) {
            if (lam.length() > n) {
                continue;
            }
            for (const Partition &mu : small) {
                for (int a = 0; a <= 3; ++a) {
                    for (int b = 0; b <= 2; ++b) {
                        for (int c = 1; c <= 3; ++c) {
                            pts.push_back(point(n, a, b, c, lam, mu));
                        }
                    }
                }
            }
        }
    }
    for (const Partition &lam : small) {
        for (const Partition &mu : small) {
            if (lam.size() + mu.size() > 2) {
                continue;
            }
            for (int a = 0; a <= 2; ++a) {
                for (int b = 0; b <= 2; ++b) {
                    for (int c = mu.empty() ? 0 : 1; c <= 2; ++c) {
                        pts.push_back(point(3, a, b, c, lam, mu));
                    }
                }
            }
        }
    }
    return pts;
}

Tally qmorris()
{
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        for (int a = 0; a <= 3; ++a) {
            for (int b = 0; b <= 3; ++b) {
                for (int c = 0; c <= 3; ++c) {
                    t.add(verify_qmorris(n, a, b, c));
                }
            }
        }
    }
    return t;
}

Tally identity()
{
    Tally t;
    for (const AfltParams &p : identity_points()) {
        t.add(verify_aflt(p));
    }
    return t;
}

Tally reduction()
{
    Tally t;
    for (int n = 1; n <= 4; ++n) {
        for (int a = 0; a <= 4; ++a) {
            for (int b = 0; b <= 4; ++b) {
                for (int c = 0; c <= 4; ++c) {
                    Report r;
                    r.check = "reduction";
                    r.param("n", n).param("a", a).param("b", b).param("c", c);
                    const RatFunc lhs = rhs_aflt(point(n, a, b, c, {}, {}));
                    const RatFunc rhs = rhs_qmorris(n, a, b, c);
                    r.lhs = lhs.to_string();
                    r.rhs = rhs.to_string();
                    r.equal = lhs == rhs;
                    t.add(r);
                }
            }
        }
    }
    return t;
}

Tally roots()
{
    Tally t;
    const auto small = enumerate(2);
    for (int n = 1; n <= 2; ++n) {
        for (const Partition &lam : small) {
            if (lam.length() > n) {
                continue;
            }
            for (const Partition &mu : small) {
                for (int b = 0; b <= 2; ++b) {
                    const int c0 = b + lam.part(1) + mu.part(1) + 1;
                    for (int c = c0; c <= c0 + 1; ++c) {
                        for (const Report &r : verify_roots(point(n, 0, b, c, lam, mu))) {
                            t.add(r);
                            if (r.refused) {
                                t.fail("unexpected refusal: " + report_text(r));
                            }
                        }
                    }
                }
            }
        }
    }
    return t;
}

Tally recursion_and_addpoints()
{
    Tally t;
    long applied = 0;
    for (const AfltParams &p : identity_points()) {
        for (const Report &r : {verify_recursion(p), verify_addpoints(p)}) {
            t.add(r);
            applied += r.refused ? 0 : 1;
        }
    }
    if (applied == 0) {
        t.fail("no point inside the regime");
    }
    return t;
}

Tally suites(const std::vector<std::string> &names)
{
    Tally t;
    for (const std::string &name : names) {
        t.add(run_suite(name, 0));
    }
    return t;
}

std::string cli_json(std::vector<std::string> args)
{
    args.insert(args.begin(), "ctmac");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::regex_replace(out.str(), std::regex("\"millis\":[-+0-9.eE]+"), "\"millis\":0");
}

Tally determinism()
{
    Tally t;
    const std::vector<std::pair<std::string, std::vector<std::string>>> runs{
        {"props", {"--json", "--seed", "12345", "props", "run", "--suite", "all"}},
        {"sweep", {"--json", "--seed", "12345", "sweep", "--max-n", "2", "--max-a", "2", "--max-b", "1", "--max-c", "2",
                   "--max-wt", "1", "--checks", "aflt,recursion,addpoints"}},
    };
    for (const auto &[label, args] : runs) {
        const std::string first = cli_json(args);
        const std::string second = cli_json(args);
        auto par = args;
        par.insert(par.begin(), {"--workers", "4"});
        const std::string third = cli_json(par);
        Report r;
        r.check = "determinism";
        r.param("command", label);
        r.lhs = std::to_string(first.size()) + " bytes";
        r.rhs = std::to_string(second.size()) + " bytes";
        r.equal = !first.empty() && first == second && first == third;
        t.add(r);
    }
    return t;
}

} // namespace

int main()
{
    struct Criterion {
        const char *name;
        std::function<Tally()> run;
    };
    const std::vector<Criterion> criteria{
        {"q-Morris constant term equals the product formula", qmorris},
        {"AFLT constant term equals the closed form", identity},
        {"closed form with empty partitions reduces to q-Morris", reduction},
        {"polynomiality in q^a, degree bound and roots", roots},
        {"recursion and additional-point identities", recursion_and_addpoints},
        {"Macdonald property suite", [] { return suites({"mac"}); }},
        {"proof-toolkit suites", [] { return suites({"cai", "vanish", "keylemma"}); }},
        {"same seed gives byte-identical JSON", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            t = criteria[i].run();
        } catch (const std::exception &e) {
            t.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = t.failed == 0 && t.total > 0;
        failed += pass ? 0 : 1;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].name << " ("
                  << t.total - t.failed << "/" << t.total << " checks";
        if (t.refused) {
            std::cout << ", " << t.refused << " outside their regime";
        }
        std::cout << ", " << timing << ")\n";
        for (const std::string &f : t.failures) {
            std::cout << "      " << f << '\n';
        }
    }
    return failed == 0 ? 0 : 1;
}
