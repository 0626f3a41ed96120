#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "acy/errors.hpp"
#include "acy/families.hpp"
#include "acy/report.hpp"
#include "acy/scan.hpp"
#include "acy/verify.hpp"

namespace {

using acy::Json;

constexpr int exit_pass = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_config_error = 2;
constexpr int exit_degenerate = 3;

struct Options {
    std::string family;
    uint64_t prime = 0;  // 0: family default
    uint32_t ext = 1;
    uint64_t seed = 1;
    unsigned jobs = 1;
    bool deep = false;
    std::string out;
};

int config_exit_code(acy::Err code) {
    switch (code) {
        case acy::Err::DegenerateParameter:
            return exit_degenerate;
        case acy::Err::BadArgument:
        case acy::Err::NotPrime:
        case acy::Err::CharTwoUnsupported:
        case acy::Err::BadExtensionDegree:
        case acy::Err::NoSuchRoot:
        case acy::Err::ArityMismatch:
        case acy::Err::TooManyPoints:
            return exit_config_error;
        default:
            return exit_check_failed;
    }
}

void emit(const Json& j, const Options& opt) {
    std::string text = acy::render(j);
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << opt.out << "\n";
        std::exit(exit_config_error);
    }
    f << text;
}

acy::FamilyId parse_family(const std::string& name) {
    std::optional<acy::FamilyId> id = acy::family_from_name(name);
    if (!id) {
        std::cerr << "unknown family: " << name
                  << " (expected one of t14, t14fiber, hm, t16, t17, t18, t110)\n";
        std::exit(exit_config_error);
    }
    return *id;
}

acy::Field make_field_for(acy::FamilyId id, const Options& opt) {
    uint64_t p = opt.prime ? opt.prime : acy::traits(id).default_primes[0];
    return acy::make_field(p, opt.ext);
}

// Same resample discipline as the verification engine: degenerate draws
// consume the stream and retry, at most 10 attempts.
acy::FamilyInstance draw_with_retry(acy::FamilyId id, const acy::Field& F, acy::SeededRng& rng,
                                    std::vector<std::string>& notes) {
    for (uint32_t attempt = 1; attempt <= 10; ++attempt) {
        try {
            return acy::draw_family(id, F, rng);
        } catch (const acy::Error& e) {
            if (e.code() != acy::Err::DegenerateParameter) throw;
            notes.push_back("attempt " + std::to_string(attempt) + ": " + e.what() +
                            "; resampled");
        }
    }
    acy::fail(acy::Err::DegenerateParameter, "parameter draws exhausted after 10 attempts");
}

int cmd_construct(const Options& opt) {
    acy::FamilyId id = parse_family(opt.family);
    acy::Field F = make_field_for(id, opt);
    acy::SeededRng rng(opt.seed);
    std::vector<std::string> notes;
    acy::FamilyInstance inst = draw_with_retry(id, F, rng, notes);
    Json j;
    j["schema_version"] = acy::k_schema_version;
    j["command"] = "construct";
    j["seed"] = opt.seed;
    j["instance"] = acy::to_json(inst);
    if (!notes.empty()) j["notes"] = notes;
    emit(j, opt);
    return exit_pass;
}

int cmd_scan(const Options& opt) {
    acy::FamilyId id = parse_family(opt.family);
    acy::Field F = make_field_for(id, opt);
    acy::SeededRng rng(opt.seed);
    std::vector<std::string> notes;
    acy::FamilyInstance inst = draw_with_retry(id, F, rng, notes);
    acy::ScanConfig cfg;
    cfg.jobs = opt.jobs;
    cfg.max_points = opt.deep ? 2000000000ull : 50000000ull;
    acy::ScanResult sc = acy::find_singular_points(inst, cfg);
    Json j;
    j["schema_version"] = acy::k_schema_version;
    j["command"] = "scan";
    j["seed"] = opt.seed;
    j["instance"] = acy::to_json(inst);
    j["scan"] = acy::to_json(sc);
    if (!notes.empty()) j["notes"] = notes;
    emit(j, opt);
    return exit_pass;
}

int cmd_orbit(const Options& opt) {
    acy::FamilyId id = parse_family(opt.family);
    acy::Field F = make_field_for(id, opt);
    acy::SeededRng rng(opt.seed);
    std::vector<std::string> notes;
    acy::FamilyInstance inst = draw_with_retry(id, F, rng, notes);
    if (!inst.nodes.orbit_seed) {
        std::cerr << "family " << opt.family << " has no distinguished orbit seed\n";
        return exit_config_error;
    }
    std::vector<acy::ProjectivePoint> pts =
        acy::orbit({inst.group.sigma, inst.group.tau}, *inst.nodes.orbit_seed);
    Json j;
    j["schema_version"] = acy::k_schema_version;
    j["command"] = "orbit";
    j["seed"] = opt.seed;
    j["family"] = acy::traits(id).name;
    j["field"] = acy::to_json(*F);
    j["group"] = inst.group.label;
    j["size"] = pts.size();
    Json arr = Json::array();
    for (const acy::ProjectivePoint& p : pts) arr.push_back(acy::to_json(p));
    j["points"] = arr;
    if (!notes.empty()) j["notes"] = notes;
    emit(j, opt);
    return exit_pass;
}

int cmd_verify(const Options& opt) {
    acy::FamilyId id = parse_family(opt.family);
    acy::Field F = make_field_for(id, opt);
    acy::VerifyOptions vo;
    vo.seed = opt.seed;
    vo.jobs = opt.jobs;
    vo.deep = opt.deep;
    acy::VerificationReport rep = acy::run_family_checks(id, F, vo);
    Json j;
    j["schema_version"] = acy::k_schema_version;
    j["command"] = "verify";
    j["report"] = acy::to_json(rep);
    emit(j, opt);
    return rep.passed ? exit_pass : exit_check_failed;
}

int cmd_report(const Options& opt) {
    acy::FamilyId id = parse_family(opt.family);
    const acy::FamilyTraits& tr = acy::traits(id);
    acy::VerifyOptions vo;
    vo.seed = opt.seed;
    vo.jobs = opt.jobs;
    vo.deep = opt.deep;
    Json runs = Json::array();
    bool all_passed = true;
    for (uint64_t p : tr.default_primes) {
        acy::Field F = acy::make_field(p, opt.ext);
        acy::VerificationReport rep = acy::run_family_checks(id, F, vo);
        all_passed = all_passed && rep.passed;
        runs.push_back(acy::to_json(rep));
    }
    Json j;
    j["schema_version"] = acy::k_schema_version;
    j["command"] = "report";
    j["family"] = tr.name;
    j["seed"] = opt.seed;
    j["passed"] = all_passed;
    j["runs"] = runs;
    emit(j, opt);
    return all_passed ? exit_pass : exit_check_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of Heisenberg-symmetric varieties"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--family", opt.family, "family name: t14, t14fiber, hm, t16, t17, t18, t110")
            ->required();
        cmd->add_option("--prime", opt.prime, "base prime (default: family default)");
        cmd->add_option("--ext", opt.ext, "extension degree k, 1..4")->default_val(1u);
        cmd->add_option("--seed", opt.seed, "seed for parameter draws")->default_val(uint64_t{1});
        cmd->add_option("--jobs", opt.jobs, "worker threads for scans")->default_val(1u);
        cmd->add_flag("--deep", opt.deep, "raise the scan size cap");
        cmd->add_option("--out", opt.out, "write JSON here instead of stdout");
    };

    CLI::App* c_construct = app.add_subcommand("construct", "build a family instance");
    CLI::App* c_verify = app.add_subcommand("verify", "run the family check battery");
    CLI::App* c_scan = app.add_subcommand("scan", "exhaustive singular-point search");
    CLI::App* c_orbit = app.add_subcommand("orbit", "orbit of the distinguished parameter point");
    CLI::App* c_report = app.add_subcommand("report", "verify over both default primes");
    for (CLI::App* c : {c_construct, c_verify, c_scan, c_orbit, c_report}) add_common(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_config_error;
    }

    auto started = std::chrono::steady_clock::now();
    int rc = exit_config_error;
    try {
        if (app.got_subcommand(c_construct)) rc = cmd_construct(opt);
        else if (app.got_subcommand(c_verify)) rc = cmd_verify(opt);
        else if (app.got_subcommand(c_scan)) rc = cmd_scan(opt);
        else if (app.got_subcommand(c_orbit)) rc = cmd_orbit(opt);
        else if (app.got_subcommand(c_report)) rc = cmd_report(opt);
    } catch (const acy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return config_exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "completed in " << elapsed << " ms\n";
    return rc;
}
