// Command-line front end: exit 0 when every check passes, 2 when every check
// was skipped, 1 on any failure or error.

#include "qinv/qinv.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qinv;

std::string verdict(bool ok) { return ok ? "ok" : "MISMATCH"; }

Status from_bool(bool ok) { return ok ? Status::pass : Status::fail; }

Status run_gauss(long k, long p, long m, std::optional<long> depth_opt) {
    const PrimeK K(k);
    if (mod(p, k) == 0) {
        std::cout << "skipped: K = " << k << " divides p = " << p << '\n';
        return Status::skipped;
    }
    if (m < 0) throw std::invalid_argument("--m must be nonnegative");
    const long depth = depth_opt.value_or(m + 3);
    const CycInt x = gauss_sum_X(p, m, K);
    const CycInt x_closed = gauss_sum_X_closed_form(p, m, K);
    const CycInt y = gauss_sum_Y(p, m, K);
    const CycInt y_direct = gauss_sum_Y_direct(p, m, K);
    const long val = h_valuation(y);
    const bool corr = check_Y_correspondence(p, m, K, static_cast<std::size_t>(depth));

    std::cout << "K = " << k << ", p = " << p << ", m = " << m << '\n'
              << "X (direct sum)    = " << x.str() << '\n'
              << "X (closed form)   = " << x_closed.str() << "   [" << verdict(x == x_closed) << "]\n"
              << "X_asympt          = " << gauss_integral_X(p, m, static_cast<std::size_t>(depth + 1)).str() << '\n'
              << "Y (binomial)      = " << y.str() << '\n'
              << "Y (direct sum)    = " << y_direct.str() << "   [" << verdict(y == y_direct) << "]\n"
              << "h-valuation of Y  = " << (val == kInfiniteValuation ? std::string("inf") : std::to_string(val)) << " (need >= " << m << ")   ["
              << verdict(val >= m) << "]\n"
              << "Y_asympt          = " << gauss_integral_Y(p, m, static_cast<std::size_t>(depth + 1)).str() << '\n'
              << "Y = leg Y_asympt^wedge mod h^" << depth + 1 << "   [" << verdict(corr) << "]\n";
    return from_bool(x == x_closed && y == y_direct && val >= m && corr);
}

Status run_lens(long p, long k, std::optional<long> depth_opt) {
    const PrimeK K(k);
    if (p == 0) throw std::invalid_argument("--p must be nonzero");
    if (mod(p, k) == 0) {
        std::cout << "skipped: K = " << k << " divides p = " << p << '\n';
        return Status::skipped;
    }
    const SurgeryPresentation pres{{-p}, {}};
    const long depth = depth_opt.value_or(k - 2);
    const CycInt closed = lens_zprime_closed_form(p, K);
    const CycInt surgery = so3_Zprime(pres, K);
    const std::size_t trunc = std::max(default_trunc(), static_cast<std::size_t>(depth + 1));
    const OhtsukiSeries series = tcc_lens(p, trunc);
    const bool lawrence = check_lawrence(surgery, series, depth);

    std::cout << "L(" << p << ",1) = surgery on the unknot with framing " << -p << ", K = " << k << '\n'
              << "Z' closed form    = " << closed.str() << '\n'
              << "Z' surgery sum    = " << surgery.str() << "   [" << verdict(closed == surgery) << "]\n"
              << "a_n               =";
    for (const auto& a : extract_a_n(surgery)) std::cout << ' ' << a.get_str();
    std::cout << '\n' << "lambda            = " << series.lambda.str() << '\n'
              << "Z' = leg(h1) sum [lambda_n] h^n mod h^" << depth + 1 << "   [" << verdict(lawrence) << "]\n";
    return from_bool(closed == surgery && lawrence);
}

Status run_ohtsuki(const std::string& manifold_path, const std::string& dtable_path, long depth, bool as_json) {
    if (depth < 0) throw std::invalid_argument("--depth must be nonnegative");
    const std::size_t trunc = static_cast<std::size_t>(depth + 1);
    OhtsukiSeries s;
    if (!dtable_path.empty()) {
        s = tcc_surgery(dtable_from_json(read_json_file(dtable_path)), trunc);
    } else {
        s = ohtsuki_series(presentation_from_json(read_json_file(manifold_path)), trunc);
    }
    if (as_json) {
        std::cout << to_json(s).dump(2) << '\n';
        return Status::pass;
    }
    std::cout << "h1 = " << s.h1.get_str() << '\n' << std::left << std::setw(4) << "n" << "lambda_n\n";
    for (std::size_t n = 0; n < s.trunc(); ++n) std::cout << std::setw(4) << n << to_string(s.lambda[n]) << '\n';
    return Status::pass;
}

Status run_verify(const std::string& manifold_path, const std::vector<long>& primes, std::optional<long> depth, const std::string& out_path,
                  const std::string& csv_path) {
    const SurgeryPresentation pres = presentation_from_json(read_json_file(manifold_path));
    if (primes.empty()) throw std::invalid_argument("verify: --primes is empty");
    for (long k : primes) static_cast<void>(PrimeK(k));
    const auto reports = verify_primes(pres, primes, depth);
    const Json doc = report_document(pres, reports);
    if (!out_path.empty()) write_text_file(out_path, doc.dump(2) + "\n");
    if (!csv_path.empty()) write_text_file(csv_path, reports_csv(reports));

    std::cout << std::left << std::setw(6) << "K" << std::setw(10) << "status" << std::setw(8) << "depth" << std::setw(10) << "lawrence" << std::setw(10)
              << "ohtsuki" << "note\n";
    for (const auto& r : reports) {
        std::cout << std::setw(6) << r.prime << std::setw(10) << to_string(r.status) << std::setw(8)
                  << (r.status == Status::skipped ? std::string("-") : std::to_string(r.lawrence_depth_checked)) << std::setw(10)
                  << (r.status == Status::skipped ? "-" : r.lawrence_pass ? "pass" : "fail") << std::setw(10)
                  << (r.status == Status::skipped ? "-" : r.ohtsuki_pass ? "pass" : "fail") << r.note << '\n';
    }
    return overall_status(reports);
}

Status run_symmetry(long p, long k) {
    const PrimeK K(k);
    bool all = true;
    std::cout << "J_{K-b} = i^{kappa p} (-1)^{p b} J_b for the " << p << "-framed unknot, K = " << k << '\n';
    for (long b = 1; b < k; ++b) {
        const bool ok = symmetry_principle_check(b, p, K);
        all = all && ok;
        std::cout << "  b = " << std::setw(3) << b << "  [" << verdict(ok) << "]\n";
    }
    return from_bool(all);
}

Status run_selftest() {
    bool all = true;
    for (const auto& r : acceptance::run_all()) {
        all = all && r.passed;
        std::cout << acceptance::format(r) << '\n';
    }
    return from_bool(all);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum invariants of rational homology spheres: exact SO(3) invariants, Ohtsuki series and their congruences"};
    app.require_subcommand(1);

    long K = 0, p = 0, m = 0, depth = -1;
    std::string manifold, dtable, out, csv;
    std::vector<long> primes;
    bool as_json = false;

    auto* gauss = app.add_subcommand("gauss", "Gauss sums X and Y against their closed forms and series");
    gauss->add_option("--K", K, "odd prime")->required();
    gauss->add_option("--p", p, "quadratic coefficient")->required();
    gauss->add_option("--m", m, "index m >= 0")->required();
    auto* gauss_depth = gauss->add_option("--depth", depth, "correspondence depth (default m+3)");

    auto* lens = app.add_subcommand("lens", "Z'(L(p,1)) by closed form and surgery sum, plus the series congruence");
    lens->add_option("--p", p, "lens parameter, nonzero")->required();
    lens->add_option("--K", K, "odd prime")->required();
    auto* lens_depth = lens->add_option("--depth", depth, "congruence depth (default K-2)");

    auto* ohtsuki = app.add_subcommand("ohtsuki", "Ohtsuki series lambda_0..lambda_D");
    ohtsuki->add_option("--manifold", manifold, "manifold JSON")->check(CLI::ExistingFile);
    ohtsuki->add_option("--dtable", dtable, "knot table JSON; surgery on that knot replaces --manifold")->check(CLI::ExistingFile);
    ohtsuki->add_option("--depth", depth, "largest n")->required();
    ohtsuki->add_flag("--json", as_json, "print JSON instead of a table");

    auto* verify = app.add_subcommand("verify", "Congruence report across primes");
    verify->add_option("--manifold", manifold, "manifold JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("--primes", primes, "odd primes")->required()->delimiter(',');
    auto* verify_depth = verify->add_option("--depth", depth, "congruence depth (default per presentation)");
    verify->add_option("--out", out, "report JSON path");
    verify->add_option("--csv", csv, "CSV of (K, n, a_n, lambda_n mod K)");

    auto* symmetry = app.add_subcommand("symmetry", "Symmetry principle for a framed unknot");
    symmetry->add_option("--p", p, "framing")->required();
    symmetry->add_option("--K", K, "odd prime")->required();

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    auto opt = [&](CLI::Option* o) { return o->count() ? std::optional<long>(depth) : std::nullopt; };
    try {
        Status s = Status::fail;
        if (*gauss) s = run_gauss(K, p, m, opt(gauss_depth));
        else if (*lens) s = run_lens(p, K, opt(lens_depth));
        else if (*ohtsuki) {
            if (manifold.empty() == dtable.empty()) throw std::invalid_argument("ohtsuki: give exactly one of --manifold and --dtable");
            s = run_ohtsuki(manifold, dtable, depth, as_json);
        } else if (*verify) s = run_verify(manifold, primes, opt(verify_depth), out, csv);
        else if (*symmetry) s = run_symmetry(p, K);
        else if (*selftest) s = run_selftest();
        return exit_code(s);
    } catch (const hypothesis_error& e) {
        std::cout << "skipped: " << e.what() << '\n';
        return exit_code(Status::skipped);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
