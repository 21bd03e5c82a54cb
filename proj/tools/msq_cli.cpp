// msq -- construct, verify, transform and enumerate magic squares.
//
// Exit codes: 0 success (and "true" verdicts), 1 failed verification,
// 2 usage or parse errors.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <msq/msq.hpp>

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string opt_str(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : "none";
}

std::string join(const std::vector<std::int64_t>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

nlohmann::ordered_json grid_json(const msq::Grid& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    j["cells"] = std::vector<msq::Cell>(g.cells().begin(), g.cells().end());
    return j;
}

int cmd_gen(int order, const std::string& method, const std::string& format) {
    const msq::Grid g = msq::construct(order, msq::parse_method(method));
    const auto fmt = msq::parse_format(format);
    std::cout << msq::render(g, fmt);
    if (fmt == msq::OutputFormat::Json) std::cout << '\n';
    return 0;
}

int cmd_verify(const std::string& input, const std::string& format) {
    const msq::Grid g = msq::parse_grid(read_input(input));
    const msq::MagicReport rep = msq::verify_magic(g);
    switch (msq::parse_format(format)) {
        case msq::OutputFormat::PrettyText:
            std::cout << "magic: " << bool_str(rep.is_magic)
                      << ", constant: " << opt_str(rep.observed_constant)
                      << ", normal: " << bool_str(rep.is_normal) << '\n'
                      << "order: " << rep.order
                      << ", expected constant: " << rep.expected_constant << '\n'
                      << "row sums: " << join(rep.row_sums, " ") << '\n'
                      << "col sums: " << join(rep.col_sums, " ") << '\n'
                      << "diagonal sums: " << rep.main_diag_sum << ' ' << rep.anti_diag_sum
                      << '\n';
            break;
        case msq::OutputFormat::Csv:
            std::cout << "order," << rep.order << '\n'
                      << "magic," << bool_str(rep.is_magic) << '\n'
                      << "normal," << bool_str(rep.is_normal) << '\n'
                      << "observed_constant," << opt_str(rep.observed_constant) << '\n'
                      << "expected_constant," << rep.expected_constant << '\n'
                      << "row_sums," << join(rep.row_sums, ",") << '\n'
                      << "col_sums," << join(rep.col_sums, ",") << '\n'
                      << "diag_sums," << rep.main_diag_sum << ',' << rep.anti_diag_sum << '\n';
            break;
        case msq::OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["order"] = rep.order;
            j["is_magic"] = rep.is_magic;
            j["is_normal"] = rep.is_normal;
            if (rep.observed_constant)
                j["observed_constant"] = *rep.observed_constant;
            else
                j["observed_constant"] = nullptr;
            j["expected_constant"] = rep.expected_constant;
            j["row_sums"] = rep.row_sums;
            j["col_sums"] = rep.col_sums;
            j["main_diag_sum"] = rep.main_diag_sum;
            j["anti_diag_sum"] = rep.anti_diag_sum;
            std::cout << j.dump() << '\n';
            break;
        }
    }
    return rep.is_magic ? 0 : 1;
}

int cmd_transform(const std::string& input, const std::string& spec, const std::string& format) {
    const msq::Grid g = msq::parse_grid(read_input(input));
    const msq::TransformSpec t = msq::parse_transform(spec);
    const msq::MagicReport before = msq::verify_magic(g);
    const msq::Grid out = msq::apply(g, t);
    const msq::MagicReport after = msq::verify_magic(out);

    const std::string verdicts =
        std::string("magic before: ") + bool_str(before.is_magic) +
        ", after: " + bool_str(after.is_magic) + "\nconstant before: " +
        opt_str(before.observed_constant) + ", after: " + opt_str(after.observed_constant) + "\n";

    switch (msq::parse_format(format)) {
        case msq::OutputFormat::PrettyText:
            std::cout << verdicts << msq::render_pretty(out);
            break;
        case msq::OutputFormat::Csv:
            // keep stdout a parseable grid; verdicts go to stderr
            std::cerr << verdicts;
            std::cout << msq::render_csv(out);
            break;
        case msq::OutputFormat::Json: {
            nlohmann::ordered_json j = grid_json(out);
            j["magic_before"] = before.is_magic;
            j["magic_after"] = after.is_magic;
            if (before.observed_constant)
                j["constant_before"] = *before.observed_constant;
            else
                j["constant_before"] = nullptr;
            if (after.observed_constant)
                j["constant_after"] = *after.observed_constant;
            else
                j["constant_after"] = nullptr;
            std::cout << j.dump() << '\n';
            break;
        }
    }
    return 0;
}

int cmd_enumerate(int order, bool count_only, const std::string& format) {
    const msq::EnumerationResult res = msq::enumerate(order, !count_only);
    switch (msq::parse_format(format)) {
        case msq::OutputFormat::PrettyText:
            std::cout << "total: " << res.total_count
                      << ", essentially_different: " << res.essentially_different_count << '\n';
            for (const msq::Grid& g : res.members) {
                std::cout << '\n' << msq::render_pretty(g);
            }
            break;
        case msq::OutputFormat::Csv:
            std::cout << res.order << ',' << res.total_count << ','
                      << res.essentially_different_count << '\n';
            for (const msq::Grid& g : res.members) {
                std::cout << '\n' << msq::render_csv(g);
            }
            break;
        case msq::OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["order"] = res.order;
            j["total"] = res.total_count;
            j["essentially_different"] = res.essentially_different_count;
            if (!count_only) {
                j["members"] = nlohmann::ordered_json::array();
                for (const msq::Grid& g : res.members) j["members"].push_back(grid_json(g));
            }
            std::cout << j.dump() << '\n';
            break;
        }
    }
    return 0;
}

int cmd_check_mp(const std::string& input) {
    const msq::Grid g = msq::parse_grid(read_input(input));
    const bool doubly_even = msq::classify_order(g.order()) == msq::OrderClass::DoublyEven;
    const bool mp = doubly_even && msq::is_most_perfect(g);
    const bool assoc = msq::is_associative(g);
    const bool pan = msq::is_pandiagonal(g);

    std::cout << "most_perfect: "
              << (doubly_even ? bool_str(mp) : "not defined (order not doubly even)")
              << ", associative: " << bool_str(assoc) << ", pandiagonal: " << bool_str(pan)
              << '\n';
    return mp ? 0 : 1;
}

int cmd_bench(int max_order, const std::string& format) {
    if (max_order > 16384) {
        throw std::invalid_argument("capacity guard: bench max order is 16384, got " +
                                    std::to_string(max_order));
    }
    if (max_order < 4 || msq::classify_order(max_order) != msq::OrderClass::DoublyEven) {
        throw std::invalid_argument("order " + std::to_string(max_order) + " is " +
                                    msq::to_string(msq::classify_order(max_order)) +
                                    "; bench requires a doubly even order");
    }
    const auto fmt = msq::parse_format(format);
    if (fmt == msq::OutputFormat::Json) {
        throw std::invalid_argument("bench supports text and csv output only");
    }

    std::vector<int> orders;
    for (int n = 4; n < max_order; n *= 2) orders.push_back(n);
    orders.push_back(max_order);

    if (fmt == msq::OutputFormat::PrettyText) {
        std::printf("%8s %14s %14s\n", "n", "construct_ms", "verify_ms");
    }
    for (const int n : orders) {
        const auto t0 = std::chrono::steady_clock::now();
        const msq::Grid g = msq::construct(n, msq::ConstructionMethod::Proposed);
        const auto t1 = std::chrono::steady_clock::now();
        const msq::MagicReport rep = msq::verify_magic(g);
        const auto t2 = std::chrono::steady_clock::now();
        if (!rep.is_magic || !rep.is_normal) {
            throw std::logic_error("constructed square failed verification at order " +
                                   std::to_string(n));
        }
        const double construct_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const double verify_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
        if (fmt == msq::OutputFormat::PrettyText) {
            std::printf("%8d %14.3f %14.3f\n", n, construct_ms, verify_ms);
        } else {
            std::printf("%d,%.3f,%.3f\n", n, construct_ms, verify_ms);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "msq -- magic square construction, verification, transformation and search.\n"
        "Exit codes: 0 success / verdict true, 1 verdict false, 2 usage or parse error."};
    app.require_subcommand(1);

    int order = 0;
    int max_order = 0;
    bool count_only = false;
    std::string method = "proposed";
    std::string format = "text";
    std::string input;
    std::string transform_spec;
    int exit_code = 0;

    auto* gen = app.add_subcommand("gen", "construct a doubly even magic square");
    gen->add_option("--order", order, "square order (multiple of 4)")->required();
    gen->add_option("--method", method, "proposed|classical (default proposed)");
    gen->add_option("--format", format, "text|csv|json (default text)");
    gen->callback([&] { exit_code = cmd_gen(order, method, format); });

    auto* verify = app.add_subcommand("verify", "check whether a grid is magic");
    verify->add_option("input", input, "grid file, '-' or omitted for stdin");
    verify->add_option("--format", format, "text|csv|json report (default text)");
    verify->callback([&] { exit_code = cmd_verify(input, format); });

    auto* transform = app.add_subcommand("transform", "apply a transformation to a grid");
    transform->add_option("input", input, "grid file, '-' or omitted for stdin");
    transform
        ->add_option("--transform", transform_spec,
                     "add:K, mul:K, transpose, swap-rows-eq:R, swap-cols-eq:C, quadrants, "
                     "exchange-1234-rows, exchange-1234-cols")
        ->required();
    transform->add_option("--format", format, "text|csv|json (default text)");
    transform->callback([&] { exit_code = cmd_transform(input, transform_spec, format); });

    auto* enumerate = app.add_subcommand("enumerate", "list all normal magic squares (order <= 4)");
    enumerate->add_option("--order", order, "square order, 1 to 4")->required();
    enumerate->add_flag("--count-only", count_only, "print the counts, discard members");
    enumerate->add_option("--format", format, "text|csv|json (default text)");
    enumerate->callback([&] { exit_code = cmd_enumerate(order, count_only, format); });

    auto* check_mp = app.add_subcommand(
        "check-mp", "report most-perfect / associative / pandiagonal verdicts");
    check_mp->add_option("input", input, "grid file, '-' or omitted for stdin");
    check_mp->callback([&] { exit_code = cmd_check_mp(input); });

    auto* bench = app.add_subcommand("bench", "time construction and verification");
    bench->add_option("--max-order", max_order, "largest order to time (<= 16384)")->required();
    bench->add_option("--format", format, "text|csv (default text)");
    bench->callback([&] { exit_code = cmd_bench(max_order, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const msq::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
