#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nfilt/cli/report.hpp"

using namespace nfilt;

namespace {

std::string read_all(std::istream& in) {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void print_text(const cli::Json& j) {
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

}// namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton filtrations, mixed multiplicities and Lojasiewicz exponents"};
    std::string command, file, expr, field = "p";
    cli::RunOptions opt;
    bool json = false;
    std::string names;
    for (const auto& c : cli::commands()) names += (names.empty() ? "" : ", ") + c;
    app.add_option("command", command, "one of: " + names)->required()->check(CLI::IsMember(cli::commands()));
    app.add_option("input", file, "input file, '-' or omitted for stdin");
    app.add_option("-e,--expr", expr, "input text given inline");
    app.add_option("--smax", opt.s_max, "largest power s in the Lojasiewicz scan")->check(CLI::PositiveNumber);
    app.add_option("--rmax", opt.r_max, "largest radius r tried for sigma")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed of the generic combinations");
    app.add_option("--field", field, "jet oracle field: Q or p")->check(CLI::IsMember({"Q", "p"}));
    app.add_option("--nmax", opt.n_max, "jet truncation cap")->check(CLI::PositiveNumber);
    app.add_flag("--json", json, "print the report as JSON");
    CLI11_PARSE(app, argc, argv);
    opt.field = field == "Q" ? Field::rationals : Field::prime;

    try {
        std::string text;
        if (!expr.empty()) {
            text = expr;
        } else if (file.empty() || file == "-") {
            text = read_all(std::cin);
        } else {
            std::ifstream in(file);
            if (!in) throw Error(Errc::invalid_argument, "cannot open " + file);
            text = read_all(in);
        }
        auto rep = cli::run(command, cli::parse(text), opt);
        if (json) {
            std::cout << rep.body.dump() << "\n";
        } else {
            print_text(rep.body);
        }
        return rep.exit_code;
    } catch (const Error& e) {
        if (json) {
            std::cout << cli::error_json(e).dump() << "\n";
        } else {
            std::cerr << "error (" << code_name(e.code()) << "): " << e.what() << "\n";
        }
        return 1;
    }
}
