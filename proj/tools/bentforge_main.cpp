/*
   Copyright 2026 The bentforge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bentforge/cli.hpp"

namespace {

bentforge::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) bentforge::fail(bentforge::Errc::ParseError, "cannot open " + path);
    bentforge::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        bentforge::fail(bentforge::Errc::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bentforge: exact construction and analysis of p-ary bent functions"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* rep = app.add_subcommand("reproduce", "run a bundled reference example against its goldens");
    std::string rep_name;
    rep->add_option("name", rep_name, "one of ex1, ex2, ex3a, ex3b")->required();
    rep->add_option("--format", format, "text or json");

    auto* ana = app.add_subcommand("analyze", "analyze a function given as a JSON spec");
    std::string ana_file, ana_delta;
    ana->add_option("-f,--function", ana_file, "function spec JSON file")->required();
    ana->add_option("--delta", ana_delta, "inner product element, e.g. log:0");
    ana->add_option("--format", format, "text or json");

    auto* con = app.add_subcommand("construct", "run the merge pipeline from a recipe file");
    std::string con_file, con_out;
    con->add_option("-r,--recipe", con_file, "recipe JSON file")->required();
    con->add_option("-o,--out", con_out, "output directory for report.json / recipe.json");
    con->add_option("--format", format, "text or json");

    auto* sea = app.add_subcommand("search", "sweep a parameter family and record predictions vs measurements");
    std::string sea_family, sea_out;
    bentforge::SearchRanges ranges;
    sea->add_option("--family", sea_family, "monomial, binomial or nwr")->required();
    sea->add_option("--p", ranges.p, "characteristic")->required();
    sea->add_option("--n", ranges.ns, "extension degree(s)")->required();
    sea->add_option("--kappa", ranges.kappas, "kappa values (binomial / nwr families)");
    int rmin = 0, rmax = 0;
    auto* orm = sea->add_option("--r-min", rmin, "smallest r (monomial)");
    auto* orx = sea->add_option("--r-max", rmax, "largest r (monomial)");
    sea->add_option("-o,--out", sea_out, "catalog path (JSON lines)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rep->parsed()) return bentforge::cmd_reproduce(rep_name, format, std::cout);
        if (ana->parsed()) {
            std::optional<std::string> d;
            if (!ana_delta.empty()) d = ana_delta;
            return bentforge::cmd_analyze(load_json(ana_file), d, format, std::cout);
        }
        if (con->parsed()) return bentforge::cmd_construct(load_json(con_file), con_out, format, std::cout);
        if (sea->parsed()) {
            if (orm->count()) ranges.r_min = rmin;
            if (orx->count()) ranges.r_max = rmax;
            if (ranges.kappas.empty()) ranges.kappas = {0, 1, 2};
            return bentforge::cmd_search(sea_family, ranges, sea_out, std::cout);
        }
    } catch (const bentforge::Error& e) {
        std::cerr << "error [" << bentforge::errc_name(e.code()) << "]: " << e.what() << "\n";
        return bentforge::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
