#include "nregular/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace nregular;

int main(int argc, char** argv) {
    CLI::App app{"exact checks for quaternionic regular-function families"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string suites_arg, n_arg = "1,2,3", lmax_arg = "3/2";

    CLI::App* run = app.add_subcommand("run", "execute check suites and emit a report");
    run->add_option("--suites", suites_arg, "comma-separated suite names (default: all)");
    run->add_option("--n", n_arg, "comma-separated tensor ranks, each in 1..4");
    run->add_option("--lmax", lmax_arg, "largest l, an integer or half-integer like 3/2");
    run->add_option("--seed", cfg.seed, "seed for randomized checks");
    run->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    run->add_option("--out", cfg.out, "write the report to this file instead of stdout");

    std::string explain_id;
    CLI::App* expl = app.add_subcommand("explain", "print the statement behind a check id");
    expl->add_option("id", explain_id, "check id, e.g. pairing.orthogonality.n2")->required();

    CLI11_PARSE(app, argc, argv);

    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) out.push_back(cur);
        return out;
    };

    if (expl->parsed()) {
        auto text = explain(explain_id);
        if (!text) {
            std::cerr << "unknown check id: " << explain_id << "\n";
            return 2;
        }
        std::cout << *text;
        return 0;
    }

    cfg.suites = split(suites_arg);
    cfg.n_range.clear();
    try {
        for (const auto& tok : split(n_arg)) {
            size_t pos = 0;
            int n = std::stoi(tok, &pos);
            if (pos != tok.size()) throw IndexRangeError("bad rank token: " + tok);
            cfg.n_range.push_back(n);
        }
        cfg.l_max = parse_half(lmax_arg);
        for (int n : cfg.n_range)
            if (n < 1 || n > 4) throw IndexRangeError("rank out of range: " + std::to_string(n));

        RunOutcome outcome = run_suites(cfg);
        const std::string& payload = cfg.format == "json" ? outcome.json : outcome.text;
        if (cfg.out.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) {
                std::cerr << "cannot open output file: " << cfg.out << "\n";
                return 2;
            }
            f << payload;
        }
        return outcome.failed == 0 ? 0 : 1;
    } catch (const IndexRangeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument&) {
        std::cerr << "usage error: cannot parse rank list: " << n_arg << "\n";
        return 2;
    }
}
