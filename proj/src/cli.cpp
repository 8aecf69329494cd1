#include <ctmac/cli.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ctmac/aflt.hpp>
#include <ctmac/errors.hpp>
#include <ctmac/macdonald.hpp>
#include <ctmac/props.hpp>

namespace ctmac
{

namespace
{

using Json = nlohmann::ordered_json;
using Task = std::function<std::vector<Report>()>;

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    bool dump_integrand = false;
    bool dump_p_basis = false;
    int workers = 1;
    bool keep_going = false;

    AfltParams point;
    std::string lambda_text, mu_text;

    std::string suite = "all";

    int min_n = 1, max_n = 2;
    int min_a = 0, max_a = 2;
    int max_b = 2, max_c = 2, max_wt = 1;
    std::vector<std::string> sweep_checks{"aflt"};

    std::string basis = "m";
};

Partition parse_partition(const std::string &text, const char *flag)
{
    try {
        return Partition::parse(text);
    } catch (const std::exception &e) {
        throw CLI::ValidationError(std::string(flag), "malformed partition '" + text + "': " + e.what());
    }
}

Report refused_report(const std::string &check, const AfltParams &p, const std::string &why)
{
    Report r;
    r.check = check;
    r.param("n", p.n).param("a", p.a).param("b", p.b).param("c", p.c);
    r.param("lambda", p.lambda.to_string()).param("mu", p.mu.to_string());
    r.refused = true;
    r.note(why);
    return r;
}

// Runs one check; domain errors become refusals, internal inconsistencies failures.
std::vector<Report> guarded(const std::string &check, const AfltParams &p, const Task &task)
{
    try {
        return task();
    } catch (const DomainError &e) {
        return {refused_report(check, p, e.what())};
    } catch (const Refused &e) {
        return {refused_report(check, p, e.what())};
    } catch (const InvariantError &e) {
        Report r = refused_report(check, p, e.what());
        r.refused = false;
        r.equal = false;
        return {r};
    }
}

Task check_task(const std::string &check, const AfltParams &p)
{
    if (check == "aflt") {
        return [p] { return guarded("aflt", p, [p] { return std::vector<Report>{verify_aflt(p)}; }); };
    }
    if (check == "qmorris") {
        return [p] { return guarded("qmorris", p, [p] { return std::vector<Report>{verify_qmorris(p.n, p.a, p.b, p.c)}; }); };
    }
    if (check == "roots") {
        return [p] { return guarded("roots", p, [p] { return verify_roots(p); }); };
    }
    if (check == "recursion") {
        return [p] { return guarded("recursion", p, [p] { return std::vector<Report>{verify_recursion(p)}; }); };
    }
    if (check == "addpoints") {
        return [p] { return guarded("addpoints", p, [p] { return std::vector<Report>{verify_addpoints(p)}; }); };
    }
    throw CLI::ValidationError("--checks", "unknown check '" + check + "'");
}

class Emitter
{
public:
    Emitter(const Options &o, std::ostream &out) : o_(o), out_(out) {}

    void emit(const Report &r)
    {
        ++total_;
        failed_ += r.failed() ? 1 : 0;
        refused_ += r.refused ? 1 : 0;
        out_ << (o_.json ? report_json(r) : report_text(r)) << '\n';
    }
    long failed() const
    {
        return failed_;
    }
    void summary(std::ostream &err) const
    {
        std::ostream &s = o_.json ? err : out_;
        s << total_ << " checks, " << failed_ << " failed, " << refused_ << " refused\n";
    }

private:
    const Options &o_;
    std::ostream &out_;
    long total_ = 0, failed_ = 0, refused_ = 0;
};

// Runs tasks on a worker pool and emits their reports in task order.  With
// stop_on_failure, no new task is started once a failure has been emitted.
void run_tasks(const std::vector<Task> &tasks, const Options &o, Emitter &em, bool stop_on_failure,
               const std::function<void(std::size_t)> &on_failure = {})
{
    const std::size_t n = tasks.size();
    std::vector<std::vector<Report>> results(n);
    std::vector<char> done(n, 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || stop.load()) {
                return;
            }
            std::vector<Report> rs;
            try {
                rs = tasks[i]();
            } catch (const std::exception &e) {
                Report r;
                r.check = "error";
                r.note(e.what());
                rs.push_back(r);
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                results[i] = std::move(rs);
                done[i] = 1;
            }
            cv.notify_all();
        }
    };
    const int nw = std::max(1, o.workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w) {
        pool.emplace_back(worker);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return done[i] != 0; });
        std::vector<Report> rs = std::move(results[i]);
        lock.unlock();
        bool failed = false;
        for (const Report &r : rs) {
            em.emit(r);
            failed = failed || r.failed();
        }
        if (failed && on_failure) {
            on_failure(i);
        }
        if (failed && stop_on_failure) {
            stop.store(true);
            cv.notify_all();
            break;
        }
    }
    for (auto &t : pool) {
        t.join();
    }
}

void dump_diagnostics(const AfltParams &p, const Options &o, std::ostream &out, std::ostream &err)
{
    std::ostream &s = o.json ? err : out;
    if (o.dump_p_basis) {
        s << "P_(" << p.lambda.to_string() << ")(q, q^" << p.c << "):\n" << mac_P_at(p.lambda, p.c).dump();
        s << "P_(" << p.mu.to_string() << ")(q, q^" << p.c << "):\n" << mac_P_at(p.mu, p.c).dump();
    }
    if (o.dump_integrand) {
        try {
            s << "integrand " << p.to_string() << ":\n" << build_integrand(p).to_string() << '\n';
        } catch (const DomainError &e) {
            s << "integrand " << p.to_string() << ": " << e.what() << '\n';
        }
    }
}

int cmd_verify(const std::string &check, const Options &o, std::ostream &out, std::ostream &err)
{
    AfltParams p = o.point;
    Emitter em(o, out);
    dump_diagnostics(p, o, out, err);
    run_tasks({check_task(check, p)}, o, em, false);
    em.summary(err);
    return em.failed() ? 1 : 0;
}

int cmd_props(const Options &o, std::ostream &out, std::ostream &err)
{
    std::vector<std::string> names;
    if (o.suite == "all") {
        names = suite_names();
    } else {
        names.push_back(o.suite);
    }
    std::vector<Task> tasks;
    for (const std::string &name : names) {
        tasks.push_back([name, seed = o.seed] { return run_suite(name, seed); });
    }
    Emitter em(o, out);
    run_tasks(tasks, o, em, false);
    em.summary(err);
    return em.failed() ? 1 : 0;
}

std::vector<AfltParams> sweep_points(const Options &o)
{
    std::vector<AfltParams> pts;
    const auto parts = enumerate(o.max_wt);
    for (int n = o.min_n; n <= o.max_n; ++n) {
        for (const Partition &lam : parts) {
            if (lam.length() > n) {
                continue;
            }
            for (const Partition &mu : parts) {
                for (int c = 0; c <= o.max_c; ++c) {
                    if (c == 0 && !mu.empty()) {
                        continue;
                    }
                    for (int b = 0; b <= o.max_b; ++b) {
                        for (int a = o.min_a; a <= o.max_a; ++a) {
                            AfltParams p;
                            p.n = n;
                            p.a = a;
                            p.b = b;
                            p.c = c;
                            p.lambda = lam;
                            p.mu = mu;
                            pts.push_back(p);
                        }
                    }
                }
            }
        }
    }
    // Cheapest first.
    std::stable_sort(pts.begin(), pts.end(), [](const AfltParams &x, const AfltParams &y) {
        const auto key = [](const AfltParams &p) {
            return std::make_tuple(p.n, p.lambda.size() + p.mu.size(), p.a + p.b + p.c);
        };
        return key(x) < key(y);
    });
    return pts;
}

int cmd_sweep(const Options &o, std::ostream &out, std::ostream &err)
{
    const auto pts = sweep_points(o);
    std::vector<Task> tasks;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (const std::string &check : o.sweep_checks) {
            tasks.push_back(check_task(check, pts[i]));
            owner.push_back(i);
        }
    }
    Emitter em(o, out);
    run_tasks(tasks, o, em, !o.keep_going, [&](std::size_t ti) {
        const AfltParams &p = pts[owner[ti]];
        err << "mismatch at " << p.to_string() << '\n';
        try {
            err << "integrand:\n" << build_integrand(p).to_string() << '\n';
        } catch (const DomainError &e) {
            err << "integrand: " << e.what() << '\n';
        }
    });
    em.summary(err);
    return em.failed() ? 1 : 0;
}

int cmd_mac_show(const Options &o, std::ostream &out)
{
    const Partition lam = o.point.lambda;
    std::vector<std::pair<std::string, std::string>> terms;
    if (o.basis == "p") {
        for (const auto &[rho, c] : mac_P(lam).coeffs()) {
            terms.emplace_back(rho.to_string(), c.to_string());
        }
    } else if (o.basis == "m") {
        for (const auto &[nu, c] : to_m_basis(mac_P(lam))) {
            terms.emplace_back(nu.to_string(), c.to_string());
        }
    } else {
        for (const auto &[nu, c] : g_expansion(lam)) {
            terms.emplace_back(nu.to_string(), c.to_string());
        }
    }
    if (o.json) {
        Json j;
        j["lambda"] = lam.to_string();
        j["basis"] = o.basis;
        j["terms"] = Json::array();
        for (const auto &[idx, c] : terms) {
            j["terms"].push_back(Json{{"index", idx}, {"coeff", c}});
        }
        out << j.dump() << '\n';
    } else {
        out << "P_(" << lam.to_string() << ") in the " << o.basis << " basis:\n";
        for (const auto &[idx, c] : terms) {
            out << c << " · " << o.basis << "_(" << idx << ")\n";
        }
    }
    return 0;
}

void add_point_options(CLI::App *cmd, Options &o)
{
    cmd->add_option("--n", o.point.n, "number of variables besides x0")->check(CLI::NonNegativeNumber);
    cmd->add_option("--a", o.point.a, "exponent a");
    cmd->add_option("--b", o.point.b, "exponent b")->check(CLI::NonNegativeNumber);
    cmd->add_option("--c", o.point.c, "exponent c")->check(CLI::NonNegativeNumber);
    cmd->add_option("--lambda", o.lambda_text, "partition, e.g. 2,1");
    cmd->add_option("--mu", o.mu_text, "partition, e.g. 1");
}

} // namespace

std::string report_json(const Report &r, bool with_timing)
{
    Json j;
    j["check"] = r.check;
    Json params = Json::object();
    for (const auto &[k, v] : r.params) {
        params[k] = v;
    }
    j["params"] = params;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["equal"] = r.equal;
    j["refused"] = r.refused;
    j["notes"] = r.notes;
    if (with_timing) {
        j["millis"] = r.millis;
        j["terms_peak"] = r.terms_peak;
    }
    return j.dump();
}

std::string report_text(const Report &r)
{
    std::ostringstream s;
    s << (r.refused ? "[REFUSED] " : r.equal ? "[PASS] " : "[FAIL] ") << r.check;
    for (const auto &[k, v] : r.params) {
        s << ' ' << k << '=' << v;
    }
    if (!r.refused) {
        s << ": " << r.lhs << (r.equal ? " == " : " != ") << r.rhs;
    }
    if (!r.notes.empty()) {
        s << " (" << r.notes << ')';
    }
    return s.str();
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Exact constant-term verifier for the AFLT q-Morris identity", "ctmac"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "one JSON object per check");
    app.add_option("--seed", o.seed, "seed for random evaluation points")->capture_default_str();
    app.add_flag("--dump-integrand", o.dump_integrand, "print the Laurent integrand");
    app.add_flag("--dump-p-basis", o.dump_p_basis, "print P_lambda and P_mu at t = q^c as c . p_rho lines");
    app.add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    CLI::App *verify = app.add_subcommand("verify", "verify one parameter point");
    verify->require_subcommand(1);
    std::string verify_check;
    for (const char *name : {"aflt", "qmorris", "roots", "recursion", "addpoints"}) {
        CLI::App *sub = verify->add_subcommand(name);
        add_point_options(sub, o);
        sub->callback([&verify_check, name] { verify_check = name; });
    }

    CLI::App *props = app.add_subcommand("props", "property suites");
    props->require_subcommand(1);
    CLI::App *props_run = props->add_subcommand("run", "run a suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    props_run->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suites))->capture_default_str();

    CLI::App *sweep = app.add_subcommand("sweep", "verify the identity over a parameter box");
    sweep->add_option("--min-n", o.min_n)->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--min-a", o.min_a)->check(CLI::NonNegativeNumber)->capture_default_str();
    sweep->add_option("--max-a", o.max_a)->check(CLI::NonNegativeNumber)->capture_default_str();
    sweep->add_option("--max-b", o.max_b)->check(CLI::NonNegativeNumber)->capture_default_str();
    sweep->add_option("--max-c", o.max_c)->check(CLI::NonNegativeNumber)->capture_default_str();
    sweep->add_option("--max-wt", o.max_wt, "bound on |lambda| and |mu|")->check(CLI::NonNegativeNumber)->capture_default_str();
    sweep->add_option("--checks", o.sweep_checks, "aflt, roots, recursion, addpoints")
        ->delimiter(',')
        ->check(CLI::IsMember({"aflt", "roots", "recursion", "addpoints"}));
    sweep->add_flag("--keep-going", o.keep_going, "continue after a mismatch");

    CLI::App *mac = app.add_subcommand("mac", "Macdonald polynomials");
    mac->require_subcommand(1);
    CLI::App *mac_show = mac->add_subcommand("show", "expand P_lambda");
    mac_show->add_option("--lambda", o.lambda_text, "partition")->required();
    mac_show->add_option("--basis", o.basis)->check(CLI::IsMember({"m", "p", "g"}))->capture_default_str();

    try {
        app.parse(argc, argv);
        o.point.lambda = parse_partition(o.lambda_text, "--lambda");
        o.point.mu = parse_partition(o.mu_text, "--mu");
        if (o.min_n > o.max_n || o.min_a > o.max_a) {
            throw CLI::ValidationError("sweep", "range inversion: minimum exceeds maximum");
        }
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (!verify_check.empty()) {
        return cmd_verify(verify_check, o, out, err);
    }
    if (*props_run) {
        return cmd_props(o, out, err);
    }
    if (*sweep) {
        return cmd_sweep(o, out, err);
    }
    if (*mac_show) {
        return cmd_mac_show(o, out);
    }
    return 2;
}

} // namespace ctmac
