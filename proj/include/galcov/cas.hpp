#pragma once

// Narrow seam around an external Pari/GP binary: one-shot subprocess per
// query, single-line scripts, replies parsed from bracketed integer lists,
// every exchange recorded to a transcript file. Class-group scans run on a
// bounded worker pool with results merged in deterministic y-order.

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fieldlab.hpp"
#include "realroots.hpp"

namespace galcov {

struct CasConfig {
    std::string path;                 // empty: $GALCOV_GP, then "gp" from PATH
    int timeout_seconds = 300;
    std::string log_dir = "cas-logs";
    bool rigor = false;               // run the certification step

    std::string resolved_path() const {
        if (!path.empty()) return path;
        if (const char* env = std::getenv("GALCOV_GP")) return env;
        return "gp";
    }
};

enum class CasErrorKind { Missing, Timeout, RunFailed, ParseFailed };

struct CasError : std::runtime_error {
    CasErrorKind kind;
    std::string transcript;
    CasError(CasErrorKind k, const std::string& what, std::string transcript_path = "")
        : std::runtime_error(what), kind(k), transcript(std::move(transcript_path)) {}
};

struct CasReport {
    std::vector<Int> class_group_invariants;  // elementary divisors, largest first
    long computed_rank_n = 0;
    std::string tool_version;
    bool certified = false;
    std::string transcript;
};

namespace detail {

inline std::atomic<unsigned>& transcript_counter() {
    static std::atomic<unsigned> n{0};
    return n;
}

inline std::string write_transcript(const CasConfig& cfg, const std::string& script,
                                    const std::string& reply, int exit_code) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.log_dir, ec);
    if (ec) return "";
    unsigned id = transcript_counter()++;
    char name[32];
    std::snprintf(name, sizeof name, "cas_%05u.log", id);
    std::string path = cfg.log_dir + "/" + name;
    std::ofstream f(path);
    f << "# query\n" << script << "\n# exit " << exit_code << "\n# reply\n" << reply;
    return path;
}

// Run the gp binary with the script on stdin; returns (stdout+stderr, exit code).
inline std::pair<std::string, int> run_subprocess(const std::string& binary,
                                                  const std::string& input, int timeout_seconds,
                                                  bool& timed_out, bool& spawn_failed) {
    timed_out = false;
    spawn_failed = false;
    int inpipe[2], outpipe[2];
    if (pipe(inpipe) != 0 || pipe(outpipe) != 0)
        throw std::runtime_error("pipe() failed");
    pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("fork() failed");
    if (pid == 0) {
        dup2(inpipe[0], STDIN_FILENO);
        dup2(outpipe[1], STDOUT_FILENO);
        dup2(outpipe[1], STDERR_FILENO);
        close(inpipe[0]);
        close(inpipe[1]);
        close(outpipe[0]);
        close(outpipe[1]);
        execlp(binary.c_str(), binary.c_str(), "-q", "-f", (char*)nullptr);
        _exit(127);
    }
    close(inpipe[0]);
    close(outpipe[1]);
    // write the script, then close to signal EOF
    const char* data = input.c_str();
    std::size_t left = input.size();
    while (left > 0) {
        ssize_t w = write(inpipe[1], data, left);
        if (w <= 0) break;
        data += w;
        left -= std::size_t(w);
    }
    close(inpipe[1]);

    std::string out;
    char buf[4096];
    auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(timeout_seconds);
    while (true) {
        auto now = std::chrono::steady_clock::now();
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count();
        if (ms <= 0) {
            kill(pid, SIGKILL);
            timed_out = true;
            break;
        }
        struct pollfd pfd { outpipe[0], POLLIN, 0 };
        int pr = poll(&pfd, 1, int(ms > 1000 ? 1000 : ms));
        if (pr > 0) {
            ssize_t r = read(outpipe[0], buf, sizeof buf);
            if (r <= 0) break;
            out.append(buf, std::size_t(r));
        }
    }
    close(outpipe[0]);
    int status = 0;
    waitpid(pid, &status, 0);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code == 127) spawn_failed = true;
    return {out, code};
}

inline std::string find_tagged_line(const std::string& out, const std::string& tag) {
    std::istringstream is(out);
    std::string line;
    while (std::getline(is, line)) {
        auto pos = line.find(tag);
        if (pos != std::string::npos) return line.substr(pos + tag.size());
    }
    return "";
}

inline std::optional<std::vector<Int>> parse_bracket_list(const std::string& s) {
    auto lb = s.find('[');
    auto rb = s.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb) return std::nullopt;
    std::vector<Int> out;
    std::string body = s.substr(lb + 1, rb - lb - 1);
    std::string cur;
    for (char ch : body + ",") {
        if (ch == ',') {
            std::string t;
            for (char c2 : cur)
                if (!isspace(static_cast<unsigned char>(c2))) t += c2;
            if (!t.empty()) out.emplace_back(t.c_str());
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

inline std::string gp_poly(const IntPolynomial& p) {
    return poly_to_string(p, "x");
}

}  // namespace detail

struct CasExchange {
    std::string output;
    std::string transcript;
};

// Raw one-shot query; returns gp's output and logs the exchange.
inline CasExchange cas_query(const std::string& script, const CasConfig& cfg) {
    bool timed_out = false, spawn_failed = false;
    auto [out, code] =
        detail::run_subprocess(cfg.resolved_path(), script + "\nquit()\n", cfg.timeout_seconds,
                               timed_out, spawn_failed);
    std::string transcript = detail::write_transcript(cfg, script, out, code);
    if (spawn_failed)
        throw CasError(CasErrorKind::Missing, "CAS binary not found: " + cfg.resolved_path(),
                       transcript);
    if (timed_out)
        throw CasError(CasErrorKind::Timeout,
                       "CAS query timed out after " + std::to_string(cfg.timeout_seconds) + "s",
                       transcript);
    if (code != 0)
        throw CasError(CasErrorKind::RunFailed, "CAS exited with code " + std::to_string(code),
                       transcript);
    return {out, transcript};
}

inline bool cas_available(const CasConfig& cfg) {
    try {
        CasConfig probe = cfg;
        probe.timeout_seconds = std::min(cfg.timeout_seconds, 20);
        cas_query("print(\"PING:\", 1+1)", probe);
        return true;
    } catch (const CasError&) {
        return false;
    }
}

// Class group of the field defined by irreducible monic P; rank of its
// n-torsion recomputed from the elementary divisors.
inline CasReport cas_classgroup(const IntPolynomial& p, long n, const CasConfig& cfg) {
    std::ostringstream script;
    script << "K = bnfinit(" << detail::gp_poly(p) << ", 1); ";
    if (cfg.rigor) script << "print(\"CERT:\", bnfcertify(K)); ";
    script << "print(\"VER:\", version()); print(\"CYC:\", K.cyc)";
    CasExchange ex = cas_query(script.str(), cfg);

    auto cyc = detail::parse_bracket_list(detail::find_tagged_line(ex.output, "CYC:"));
    if (!cyc)
        throw CasError(CasErrorKind::ParseFailed, "could not parse class group reply",
                       ex.transcript);
    CasReport rep;
    rep.class_group_invariants = *cyc;
    rep.transcript = ex.transcript;
    for (const auto& d : rep.class_group_invariants)
        if (mod_floor(d, Int(n)) == 0) ++rep.computed_rank_n;
    std::string ver = detail::find_tagged_line(ex.output, "VER:");
    rep.tool_version = ver.empty() ? "unknown" : ver;
    if (cfg.rigor) {
        std::string cert = detail::find_tagged_line(ex.output, "CERT:");
        rep.certified = cert.find('1') != std::string::npos;
    }
    return rep;
}

// polisirreducible through the same seam; used as the fallback when degree
// patterns are inconclusive.
inline bool cas_irreducible(const IntPolynomial& p, const CasConfig& cfg) {
    CasExchange ex =
        cas_query("print(\"IRR:\", polisirreducible(" + detail::gp_poly(p) + "))", cfg);
    std::string line = detail::find_tagged_line(ex.output, "IRR:");
    if (line.find('1') != std::string::npos) return true;
    if (line.find('0') != std::string::npos) return false;
    throw CasError(CasErrorKind::ParseFailed, "could not parse irreducibility reply",
                   ex.transcript);
}

struct RankClaimReport {
    CaseId id;
    Int y;
    long n = 0;
    int bound = 0;
    long computed = 0;
    bool pass = false;
    CasReport cas;
};

inline RankClaimReport verify_rank_claim(CaseId id, const Int& y, long n, const CasConfig& cfg) {
    const GroupCase& c = get_case(id);
    FieldCandidate cand = specialize(id, y, n);
    RankClaimReport rep;
    rep.id = id;
    rep.y = y;
    rep.n = n;
    rep.bound = rank_bound(c.s, cand.signature);
    rep.cas = cas_classgroup(cand.poly, n, cfg);
    rep.computed = rep.cas.computed_rank_n;
    rep.pass = rep.computed >= rep.bound;
    return rep;
}

// Bounded-width scan; one subprocess per (y), reports merged in y-order.
// Individual CAS failures are recorded, not fatal.
struct ScanEntry {
    Int y;
    std::optional<RankClaimReport> report;
    std::string error;
};

inline std::vector<ScanEntry> scan_rank_claims(CaseId id, const std::vector<Int>& ys, long n,
                                               const CasConfig& cfg, int width = 2) {
    std::vector<ScanEntry> out(ys.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= ys.size()) return;
            out[i].y = ys[i];
            try {
                out[i].report = verify_rank_claim(id, ys[i], n, cfg);
            } catch (const std::exception& e) {
                out[i].error = e.what();
            }
        }
    };
    if (width < 1) width = 1;
    std::vector<std::thread> pool;
    for (int i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace galcov
