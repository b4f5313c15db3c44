#include "fockforge/cli/app.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fockforge/adhm/adhm.hpp"
#include "fockforge/characters/affine.hpp"
#include "fockforge/cli/checks.hpp"
#include "fockforge/wlattice/lattice.hpp"

namespace fockforge::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

void summarize(const CheckReport& r) {
    std::cerr << r.check << ": " << to_string(r.status);
    if (!r.witnesses.empty()) std::cerr << " (" << r.witnesses.size() << " witnesses; first: " << r.witnesses[0] << ")";
    std::cerr << " [" << r.seconds << " s]\n";
}

Json series_list(const characters::QSeries& s) {
    Json out = Json::array();
    for (const auto& c : s.coeffs()) out.push_back(c.get_str());
    return out;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"fockforge: exact checks on Fock spaces, reflection operators, W-lattices and ADHM data"};
    app.require_subcommand(1);
    int code = 0;

    // check
    auto* check = app.add_subcommand("check", "run one registered check");
    std::string check_name, json_path;
    CheckParams params;
    int max_degree = -1, rank = 0;
    std::string type;
    bool timing = false;
    check->add_option("name", check_name, "check name (see `list`)")->required();
    check->add_option("--max-degree", max_degree, "truncation degree");
    check->add_option("--seed", params.seed, "random seed")->default_val(0);
    check->add_option("--type", type, "affine type, e.g. G2");
    check->add_option("--rank", rank, "largest rank")->check(CLI::PositiveNumber);
    check->add_option("--json", json_path, "also write the report here");
    check->add_flag("--timing", timing, "include wall-clock seconds");
    check->callback([&] {
        if (max_degree >= 0) params.max_degree = max_degree;
        if (!type.empty()) params.type = type;
        if (rank > 0) params.rank = rank;
        find_check(check_name);
        auto r = run_check(check_name, params);
        emit(to_json(r, timing), json_path);
        summarize(r);
        code = r.ok() ? 0 : 1;
    });

    // ybe
    auto* ybe = app.add_subcommand("ybe", "Yang-Baxter residual at one seeded specialization");
    int ybe_degree = 2;
    std::uint64_t ybe_seed = 0;
    ybe->add_option("--degree", ybe_degree, "truncation degree")->default_val(2)->check(CLI::NonNegativeNumber);
    ybe->add_option("--seed", ybe_seed, "random seed")->default_val(0);
    ybe->add_option("--json", json_path, "also write the report here");
    ybe->add_flag("--timing", timing, "include wall-clock seconds");
    ybe->callback([&] {
        auto r = run_ybe(ybe_degree, ybe_seed);
        emit(to_json(r, timing), json_path);
        summarize(r);
        code = r.ok() ? 0 : 1;
    });

    // char
    auto* chr = app.add_subcommand("char", "level-one multiplicities of mult(Lambda_0 - d delta)");
    std::string char_type;
    int char_max = 10;
    bool tsv = false;
    chr->add_option("--type", char_type, "affine type (A1, G2, ...) or `all`")->required();
    chr->add_option("--max", char_max, "largest d")->default_val(10)->check(CLI::NonNegativeNumber);
    chr->add_flag("--tsv", tsv, "tab-separated rows instead of JSON");
    chr->add_option("--json", json_path, "also write the JSON here");
    chr->callback([&] {
        std::vector<characters::AffineType> types;
        if (char_type == "all") types = characters::catalog_types();
        else {
            try {
                types = {characters::AffineType::parse(char_type)};
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        if (tsv) {
            std::cout << "type\td\tmultiplicity\n";
            for (const auto& t : types) {
                auto s = characters::level1_series(t, char_max);
                for (int d = 0; d <= char_max; ++d) std::cout << t.name() << '\t' << d << '\t' << s[d].get_str() << '\n';
            }
            return;
        }
        Json out = Json::array();
        for (const auto& t : types)
            out.push_back({{"type", t.name()},
                           {"dual_coxeter", t.dual_coxeter()},
                           {"multiplicities", series_list(characters::level1_series(t, char_max))}});
        emit(types.size() == 1 ? out[0] : out, json_path);
    });

    // series
    auto* ser = app.add_subcommand("series", "Gieseker, IH or colored partition series");
    std::string kind = "gieseker";
    long ser_r = 1;
    int ser_max = 10;
    ser->add_option("kind", kind, "gieseker | ih | colored")
        ->check(CLI::IsMember({"gieseker", "ih", "colored"}))
        ->default_val("gieseker");
    ser->add_option("-r,--rank", ser_r, "r (rank for ih, colors for colored)")->default_val(1)->check(CLI::NonNegativeNumber);
    ser->add_option("--max", ser_max, "largest degree")->default_val(10)->check(CLI::NonNegativeNumber);
    ser->callback([&] {
        auto s = kind == "gieseker" ? characters::gieseker_series(ser_r, ser_max)
                 : kind == "ih"     ? characters::ih_series(ser_r, ser_max)
                                    : characters::colored_partition_series(ser_r, ser_max);
        std::cout << s.to_string() << "\n";
    });

    // list
    auto* list = app.add_subcommand("list", "registered checks and their flags");
    bool list_json = false;
    std::string prefix;
    list->add_flag("--json", list_json, "machine-readable registry");
    list->add_option("--prefix", prefix, "keep checks whose module or name starts with this");
    list->callback([&] {
        Json out = Json::array();
        for (const auto& c : registry()) {
            if (!prefix.empty() && c.module.rfind(prefix, 0) != 0 && c.name.rfind(prefix, 0) != 0) continue;
            if (list_json)
                out.push_back({{"name", c.name},
                               {"module", c.module},
                               {"summary", c.summary},
                               {"flags", c.flags},
                               {"quick_degree", c.quick_degree},
                               {"full_degree", c.full_degree}});
            else
                std::cout << c.name << "\t" << c.module << "\t" << c.summary << "\n";
        }
        if (list_json) std::cout << out.dump(2) << "\n";
    });

    // suite
    auto* suite = app.add_subcommand("suite", "run every check at the profile's degrees");
    std::string profile = "quick";
    int jobs = 1;
    std::uint64_t suite_seed = 0;
    suite->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}))->default_val("quick");
    suite->add_option("--seed", suite_seed, "random seed")->default_val(0);
    suite->add_option("--jobs", jobs, "checks run concurrently")->default_val(1)->check(CLI::PositiveNumber);
    suite->add_option("--json", json_path, "also write the report here");
    suite->add_flag("--timing", timing, "include wall-clock seconds");
    suite->callback([&] {
        auto s = run_suite(parse_profile(profile), suite_seed, jobs);
        emit(to_json(s, timing), json_path);
        for (const auto& r : s.checks) summarize(r);
        std::cerr << "suite " << profile << ": " << (s.ok() ? "pass" : "fail") << "\n";
        code = s.ok() ? 0 : 1;
    });

    // intersect
    auto* inter = app.add_subcommand("intersect", "Vir_1 and Vir_2 lattices of sl3 along a seeded line");
    int inter_degree = 1;
    std::uint64_t inter_seed = 1;
    inter->add_option("--degree", inter_degree, "degree")->default_val(1)->check(CLI::NonNegativeNumber);
    inter->add_option("--seed", inter_seed, "line seed")->default_val(1);
    inter->callback([&] {
        auto a = wlattice::vir_sublattice(wlattice::Algebra::sl3, 0, inter_degree);
        auto b = wlattice::vir_sublattice(wlattice::Algebra::sl3, 1, inter_degree);
        auto x = wlattice::pid_intersection(a, b, wlattice::LineSpecialization(a.ambient->params().vars, inter_seed));
        auto list = [](const std::vector<exact::UPoly>& ds) {
            Json out = Json::array();
            for (const auto& d : ds) out.push_back(d.to_string("t"));
            return out;
        };
        std::cout << Json{{"algebra", "sl3"},
                          {"degree", inter_degree},
                          {"line_seed", x.seed},
                          {"rank", x.rank},
                          {"divisors", list(x.divisors)},
                          {"divisors_in_S1", list(x.divisors_in_first)},
                          {"divisors_in_S2", list(x.divisors_in_second)}}
                         .dump(2)
                  << "\n";
    });

    // adhm
    auto* fixed = app.add_subcommand("adhm", "ADHM data at a torus-fixed point");
    std::string tuple;
    fixed->add_option("tuple", tuple, "partition tuple, e.g. \"2,1;;1\"")->required();
    fixed->callback([&] {
        adhm::PartitionTuple t;
        try {
            t = adhm::parse_partition_tuple(tuple);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        auto x = adhm::fixed_point_data(t);
        Json out{{"tuple", adhm::to_string(t)}, {"data", adhm::to_json(x)}, {"stable", adhm::is_stable(x)},
                 {"moment_map_zero", adhm::moment_map(x).is_zero()}};
        std::cout << out.dump(2) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}

}  // namespace fockforge::cli
