#include "cli_app.hpp"

#include "lattice_forge/csv.hpp"

#include <catch_amalgamated.hpp>

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cli = lattice_forge::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

/// Header name -> value of the first data row.
std::map<std::string, std::string> first_row(const std::string& csv)
{
    const auto ls = lines(csv);
    REQUIRE(ls.size() >= 3);
    REQUIRE(ls[0] == "# lattice-forge v1");
    const auto header = split(ls[1]);
    const auto row = split(ls[2]);
    REQUIRE(header.size() == row.size());
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out[header[i]] = row[i];
    return out;
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("lattice_forge_test_" + name);
}

} // namespace

TEST_CASE("construct reports distances and bounds")
{
    auto r = invoke({"construct", "--d", "50", "--n", "101", "--method", "subgroup", "--deterministic"});
    REQUIRE(r.code == 0);
    auto row = first_row(r.out);
    CHECK(std::stod(row["min_l1"]) == Catch::Approx(12.624).margin(1e-3));
    CHECK(std::stod(row["min_l2"]) == Catch::Approx(2.0513).margin(1e-4));
    CHECK(row["l1_within_bounds"] == "true");
    CHECK(row["l2_within_bounds"] == "true");
    CHECK(row["distinct_l1"] == "1");

    r = invoke({"construct", "--d", "2", "--n", "5", "--method", "subgroup", "--deterministic"});
    REQUIRE(r.code == 0);
    row = first_row(r.out);
    CHECK(row["z"] == "1 2");
    CHECK(std::stod(row["min_l1"]) == Catch::Approx(0.6));
}

TEST_CASE("construct with korobov and explicit vectors")
{
    auto r = invoke({"construct", "--d", "3", "--n", "13", "--method", "korobov", "--norm", "l1", "--deterministic"});
    REQUIRE(r.code == 0);
    CHECK_FALSE(first_row(r.out)["multiplier"].empty());

    r = invoke({"construct", "--d", "2", "--n", "5", "--method", "explicit", "--z", "1,4", "--deterministic"});
    REQUIRE(r.code == 0);
    auto row = first_row(r.out);
    CHECK(row["l1_within_bounds"] == "false");
    CHECK(row["degenerate"] == "false");

    r = invoke({"construct", "--d", "2", "--n", "5", "--method", "explicit", "--z", "1,1", "--deterministic"});
    REQUIRE(r.code == 0);
    row = first_row(r.out);
    CHECK(row["degenerate"] == "true");
    CHECK(row["l1_lower"].empty());

    CHECK(invoke({"construct", "--d", "2", "--n", "5", "--method", "explicit"}).code == 2);
    CHECK(invoke({"construct", "--d", "2", "--n", "5", "--method", "explicit", "--z", "1,5"}).code == 2);
    CHECK(invoke({"construct", "--d", "2", "--n", "5", "--z", "1,2"}).code == 2);
}

TEST_CASE("construct diagnoses inadmissible parameters")
{
    auto r = invoke({"construct", "--d", "3", "--n", "12"});
    CHECK(r.code == 3);
    CHECK(r.err.find("2d does not divide n-1") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(invoke({"construct", "--d", "2", "--n", "9"}).code == 3);
    CHECK(invoke({"construct", "--d", "2", "--n", "9", "--method", "korobov"}).code == 3);
}

TEST_CASE("admissible lists primes")
{
    const auto values = [](std::vector<std::string> args) {
        args.insert(args.begin(), "admissible");
        args.push_back("--deterministic");
        const auto r = invoke(args);
        REQUIRE(r.code == 0);
        std::vector<std::string> ns;
        const auto ls = lines(r.out);
        for (std::size_t i = 2; i < ls.size(); ++i)
            ns.push_back(split(ls[i])[2]);
        return ns;
    };
    CHECK(values({"--d", "50", "--count", "3"}) == std::vector<std::string>{"101", "401", "601"});
    CHECK(values({"--d", "100", "--count", "1"}) == std::vector<std::string>{"401"});
    CHECK(values({"--d", "1", "--count", "2"}) == std::vector<std::string>{"3", "5"});
}

TEST_CASE("integrate: rows, summary and ordering")
{
    auto r = invoke({"integrate", "--d", "100", "--n", "401", "--runs", "50", "--seed", "7", "--deterministic"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2 + 100 + 4);
    CHECK(ls[1] == "method,d,n,seed,run,estimate,exact,rel_error");
    std::map<std::string, double> mean;
    for (std::size_t i = 2 + 100; i < ls.size(); ++i) {
        const auto cells = split(ls[i]);
        if (cells[4] == "mean")
            mean[cells[0]] = std::stod(cells[7]);
    }
    REQUIRE(mean.size() == 2);
    CHECK(mean["subgroup"] < mean["mc"]);

    r = invoke({"integrate", "--d", "1", "--n", "3", "--method", "subgroup", "--runs", "1", "--no-shift",
                "--deterministic"});
    REQUIRE(r.code == 0);
    CHECK(std::stod(first_row(r.out)["estimate"]) ==
          Catch::Approx((1.0 + std::exp(1.0 / 3) + std::exp(2.0 / 3)) / 3).epsilon(1e-15));
}

TEST_CASE("output is byte-identical under --deterministic")
{
    const std::vector<std::string> args{"integrate", "--d", "5", "--n", "61", "--runs", "3", "--seed", "4",
                                        "--method", "subgroup,mc,korobov", "--deterministic"};
    const auto a = invoke(args), b = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto plain = args;
    plain.pop_back();
    const auto timestamped = invoke(plain);
    CHECK(lines(timestamped.out)[1].rfind("# generated ", 0) == 0);
    CHECK(lines(timestamped.out).size() == lines(a.out).size() + 1);
}

TEST_CASE("JSON mirrors CSV")
{
    const std::vector<std::string> base{"boltzmann", "--d", "4", "--n", "41", "--runs", "2", "--seed", "3",
                                        "--reference-samples", "20000", "--deterministic"};
    auto csv_args = base, json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto csv = invoke(csv_args), js = invoke(json_args);
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["schema"] == "lattice-forge v1");
    CHECK_FALSE(doc.contains("generated"));
    const auto ls = lines(csv.out);
    const auto header = split(ls[1]);
    std::vector<nlohmann::json> all(doc["rows"].begin(), doc["rows"].end());
    all.insert(all.end(), doc["summary"].begin(), doc["summary"].end());
    REQUIRE(all.size() == ls.size() - 2);
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto cells = split(ls[i + 2]);
        for (std::size_t c = 0; c < header.size(); ++c) {
            const auto& v = all[i][header[c]];
            if (v.is_number_float())
                REQUIRE(std::stod(cells[c]) == v.get<double>());
            else if (v.is_number())
                REQUIRE(cells[c] == std::to_string(v.get<std::uint64_t>()));
            else
                REQUIRE(cells[c] == v.get<std::string>());
        }
    }
}

TEST_CASE("sphere command")
{
    auto r = invoke({"sphere", "--d", "50", "--n", "101", "--verify", "--deterministic"});
    REQUIRE(r.code == 0);
    auto row = first_row(r.out);
    CHECK(std::stod(row["mu"]) == Catch::Approx(0.1490).margin(5e-4));
    CHECK(std::stod(row["bound_t3"]) == Catch::Approx(0.402).margin(5e-4));
    CHECK(row["bound_holds"] == "true");
    CHECK(std::abs(std::stod(row["pairwise_mu"]) - std::stod(row["mu"])) < 1e-10);

    const auto frame = temp_path("frame.csv");
    r = invoke({"sphere", "--d", "4", "--n", "13", "--frame-output", frame.string(), "--deterministic"});
    REQUIRE(r.code == 0);
    std::ifstream in(frame);
    const auto V = lattice_forge::read_csv_matrix(in);
    CHECK(V.rows() == 4);
    CHECK(V.cols() == 26);
    std::filesystem::remove(frame);

    CHECK(invoke({"sphere", "--d", "5", "--n", "101"}).code == 2);
    CHECK(invoke({"sphere", "--d", "14", "--n", "101"}).code == 3);
}

TEST_CASE("bench-timing emits one row per method")
{
    const auto start = std::chrono::steady_clock::now();
    const auto r = invoke({"bench-timing", "--d", "2", "--n", "5", "--deterministic"});
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(split(ls[2])[0] == "subgroup");
    CHECK(split(ls[3])[0] == "korobov");
    CHECK(elapsed < 1.0);
    CHECK(invoke({"bench-timing", "--d", "3", "--n", "13"}).code == 0);
    CHECK(invoke({"bench-timing", "--d", "4", "--n", "13"}).code == 3);
}

TEST_CASE("kernel and features commands")
{
    const auto data_path = temp_path("data.csv");
    {
        std::ofstream out(data_path);
        out << "# rows\n";
        for (int i = 0; i < 30; ++i)
            out << i * 0.1 << ',' << (i % 7) * 0.5 << ',' << -i * 0.05 << '\n';
    }
    auto r = invoke({"kernel", "--data", data_path.string(), "--samples", "20", "--n", "61", "--runs", "2",
                     "--deterministic"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 2 + 4 + 4);
    CHECK(first_row(r.out)["d"] == "3");
    CHECK(invoke({"kernel", "--data", data_path.string(), "--d", "4", "--n", "61"}).code == 2);

    const auto gram_path = temp_path("gram.csv");
    r = invoke({"features", "--data", data_path.string(), "--samples", "20", "--n", "61", "--kernel", "arccos1",
                "--gram-output", gram_path.string(), "--deterministic"});
    REQUIRE(r.code == 0);
    std::istringstream fin(r.out);
    const auto phi = lattice_forge::read_csv_matrix(fin);
    CHECK(phi.rows() == 20);
    CHECK(phi.cols() == 61);
    std::ifstream gin(gram_path);
    const auto G = lattice_forge::read_csv_matrix(gin);
    CHECK(G.rows() == 20);
    CHECK(G.cols() == 20);
    CHECK((G - phi * phi.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(invoke({"features", "--n", "61", "--no-shift"}).code == 2);
    CHECK(invoke({"features", "--n", "61", "--method", "subgroup,mc"}).code == 2);
    std::filesystem::remove(data_path);
    std::filesystem::remove(gram_path);

    CHECK(invoke({"kernel", "--sigma", "0"}).code == 2);
    CHECK(invoke({"kernel", "--kernel", "laplace"}).code == 2);
    CHECK(invoke({"kernel", "--data", "/nonexistent.csv"}).code == 2);
}

TEST_CASE("points command")
{
    auto r = invoke({"points", "--d", "3", "--n", "13", "--no-shift", "--deterministic"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    const auto P = lattice_forge::read_csv_matrix(in);
    REQUIRE(P.rows() == 13);
    CHECK(P(1, 1) == 4.0 / 13.0);
    const auto path = temp_path("points.csv");
    r = invoke({"points", "--d", "2", "--n", "100", "--method", "mc", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream fin(path);
    CHECK(lattice_forge::read_csv_matrix(fin).rows() == 100);
    std::filesystem::remove(path);
}

TEST_CASE("usage errors")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"construct", "--d", "3"}).code == 2);
    CHECK(invoke({"construct", "--d", "x", "--n", "13"}).code == 2);
    CHECK(invoke({"integrate", "--runs", "0"}).code == 2);
    CHECK(invoke({"integrate", "--method", "sobol"}).code == 2);
    CHECK(invoke({"integrate", "--c", "0"}).code == 2);
    CHECK(invoke({"integrate", "--format", "xml"}).code == 2);
    CHECK(invoke({"boltzmann", "--target", "joint"}).code == 2);
    CHECK(invoke({"integrate", "--d", "3", "--n", "12"}).code == 3);
    CHECK(invoke({"integrate", "--d", "2", "--n", "9"}).code == 3);
    CHECK(invoke({"admissible", "--d", "0"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}
