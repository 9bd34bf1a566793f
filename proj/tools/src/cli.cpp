#include "rmclass_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "rmclass/anf.hpp"
#include "rmclass/burnside.hpp"
#include "rmclass/conjclasses.hpp"
#include "rmclass/errors.hpp"
#include "rmclass/gf2.hpp"
#include "rmclass/group.hpp"
#include "rmclass/repr.hpp"
#include "rmclass_cli/oracle.hpp"

namespace rmclass::cli {

namespace {

struct ProviderOptions {
    std::string provider = "canonical";
    std::string file;
    std::uint64_t seed = conj::kDefaultSeed;
    unsigned threads = 1;

    conj::CellRequest request() const
    {
        conj::CellRequest r;
        r.provider = conj::parse_provider(provider);
        r.file = file;
        r.seed = seed;
        r.threads = threads;
        if (r.provider == conj::Provider::import && r.file.empty())
            throw InvalidParameters("--provider import requires --file");
        return r;
    }
};

void add_provider_options(CLI::App* cmd, ProviderOptions& p)
{
    cmd->add_option("--provider", p.provider, "Cell provider")
        ->check(CLI::IsMember({"exhaustive", "canonical", "import"}))
        ->capture_default_str();
    cmd->add_option("--file", p.file, "Cell file for --provider import");
    cmd->add_option("--seed", p.seed, "Seed for commutant sampling")->capture_default_str();
    cmd->add_option("--threads", p.threads, "Worker threads, 0 = all cores")->capture_default_str();
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_seconds(double s)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s;
    return os.str();
}

struct CountArgs {
    int n = 0;
    int s = 0;
    int k = -1;
    ProviderOptions provider;
};

int cmd_count(const CountArgs& a, std::ostream& out)
{
    const auto r = burnside::count(a.n, a.s, a.k, a.provider.request());
    out << "n=" << r.n << "\n"
        << "s=" << r.s << "\n"
        << "k=" << r.k << "\n"
        << "provider=" << r.provider << "\n"
        << "cells=" << r.cells << "\n"
        << "seconds=" << format_seconds(r.seconds) << "\n"
        << "count=" << to_decimal(r.count) << "\n";
    return kExitOk;
}

struct VerifyArgs {
    int max_n = 8;
    std::string table;
    std::string oracle;
    ProviderOptions provider;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    if (a.max_n < 1 || a.max_n > group::kMaxVars)
        throw InvalidParameters("--max-n must lie in [1, " + std::to_string(group::kMaxVars) + "]");
    const auto start = std::chrono::steady_clock::now();
    const auto path = a.oracle.empty() ? default_oracle_path() : std::filesystem::path(a.oracle);
    const auto entries = select_entries(load_oracle(path), a.max_n, a.table);
    const auto request = a.provider.request();

    out << "oracle=" << path.string() << "\n"
        << "provider=" << conj::provider_name(request.provider) << "\n";

    std::map<int, std::vector<conj::ConjCell>> cells;
    std::size_t passed = 0;
    std::size_t failed = 0;
    for (const auto& e : entries) {
        auto it = cells.find(e.n);
        if (it == cells.end())
            it = cells.emplace(e.n, conj::provide_cells(e.n, request)).first;
        const auto got = burnside::count(e.n, e.s, e.k, it->second, conj::provider_name(request.provider),
                                         request.threads);
        const auto value = to_decimal(got.count);
        const std::string where =
            "table=" + e.table + " n=" + std::to_string(e.n) + " k=" + std::to_string(e.k) + " s=" + std::to_string(e.s);
        if (value == e.count) {
            ++passed;
            out << "PASS " << where << " count=" << value << "\n";
        } else {
            ++failed;
            out << "FAIL " << where << " expected=" << e.count << " got=" << value << "\n";
        }
    }
    out << "passed=" << passed << "\n"
        << "failed=" << failed << "\n"
        << "total=" << entries.size() << "\n"
        << "seconds=" << format_seconds(seconds_since(start)) << "\n";
    return failed == 0 ? kExitOk : kExitMismatch;
}

struct ClassesArgs {
    int n = 0;
    std::string out_path;
    ProviderOptions provider;
};

int cmd_classes(const ClassesArgs& a, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    const auto request = a.provider.request();
    const auto cells = conj::provide_cells(a.n, request);
    conj::validate_cells(cells, a.n);
    if (a.out_path.empty()) {
        conj::write_cells(out, cells, a.n);
        return kExitOk;
    }
    conj::export_cells(cells, a.n, a.out_path);
    out << "n=" << a.n << "\n"
        << "provider=" << conj::provider_name(request.provider) << "\n"
        << "cells=" << cells.size() << "\n"
        << "total=" << to_decimal(conj::total_size(cells)) << "\n"
        << "file=" << a.out_path << "\n"
        << "seconds=" << format_seconds(seconds_since(start)) << "\n";
    return kExitOk;
}

struct TauArgs {
    std::string element;
    std::vector<std::string> matrix;
    std::string vector;
    int s = 0;
    int k = -1;
};

group::AffineElement tau_element(const TauArgs& a)
{
    if (!a.element.empty()) {
        if (!a.matrix.empty() || !a.vector.empty())
            throw InvalidParameters("use either --element or --matrix/--vector");
        std::ifstream in(a.element);
        if (!in)
            throw InvalidParameters("cannot open element file " + a.element);
        return group::read_element(in);
    }
    if (a.matrix.empty())
        throw InvalidParameters("tau needs --element or --matrix");
    auto linear = gf2::BitMatrix::from_strings(a.matrix);
    auto shift = a.vector.empty() ? gf2::BitVector(linear.rows()) : gf2::BitVector::from_string(a.vector);
    return group::AffineElement(std::move(linear), std::move(shift));
}

int cmd_tau(const TauArgs& a, std::ostream& out)
{
    const auto g = tau_element(a);
    const auto tau = repr::tau_matrix(g, a.s, a.k);
    const auto rank = gf2::rank_plus_identity(tau.matrix);
    out << "n=" << tau.n << "\n"
        << "s=" << tau.s << "\n"
        << "k=" << tau.k << "\n"
        << "d=" << tau.matrix.rows() << "\n";
    for (const auto& row : tau.matrix.to_strings())
        out << "row=" << row << "\n";
    out << "rank_plus_identity=" << rank << "\n"
        << "fix_count=" << to_decimal(pow2(tau.matrix.rows() - rank)) << "\n";
    return kExitOk;
}

struct CvArgs {
    int n = 0;
    int s = 0;
    int k = -1;
    std::string anf;
};

int cmd_cv(const CvArgs& a, std::ostream& out)
{
    const auto f = anf::parse(a.anf, a.n);
    const auto v = anf::project(f, a.s, a.k);
    out << "n=" << v.n << "\n"
        << "s=" << v.s << "\n"
        << "k=" << v.k << "\n"
        << "anf=" << anf::to_string(f) << "\n"
        << "cv=" << v.bits.to_string() << "\n";
    return kExitOk;
}

void add_space_options(CLI::App* cmd, int& n, int& s, int& k)
{
    cmd->add_option("--n", n, "Number of variables")->required();
    cmd->add_option("--s", s, "Upper degree")->required();
    cmd->add_option("--k", k, "Quotient degree, -1 for none")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Affine equivalence classes of Boolean functions modulo Reed-Muller codes", "rmclass"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Count orbits of AGL(n,2) on R(s,n)/R(k,n)");
    add_space_options(count, count_args.n, count_args.s, count_args.k);
    add_provider_options(count, count_args.provider);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Recompute oracle entries and diff against them");
    verify->add_option("--max-n", verify_args.max_n, "Largest n to recompute")->capture_default_str();
    verify->add_option("--table", verify_args.table, "Only entries of this table (I..X)");
    verify->add_option("--oracle", verify_args.oracle, "Oracle data file");
    add_provider_options(verify, verify_args.provider);

    ClassesArgs classes_args;
    auto* classes = app.add_subcommand("classes", "Write the cell decomposition of AGL(n,2)");
    classes->add_option("--n", classes_args.n, "Number of variables")->required();
    classes->add_option("--out", classes_args.out_path, "Output file (stdout when omitted)");
    add_provider_options(classes, classes_args.provider);

    TauArgs tau_args;
    auto* tau = app.add_subcommand("tau", "Print the quotient matrix of an affine element");
    tau->add_option("--element", tau_args.element, "Element file: n, then n rows of A, then b");
    tau->add_option("--matrix", tau_args.matrix, "Rows of A as 0/1 strings");
    tau->add_option("--vector", tau_args.vector, "b as a 0/1 string");
    tau->add_option("--s", tau_args.s, "Upper degree")->required();
    tau->add_option("--k", tau_args.k, "Quotient degree, -1 for none")->required();

    CvArgs cv_args;
    auto* cv = app.add_subcommand("cv", "Print the coefficient vector of an ANF expression");
    add_space_options(cv, cv_args.n, cv_args.s, cv_args.k);
    cv->add_option("--anf", cv_args.anf, "Expression such as 'x1*x2 + x3 + 1'")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*count)
            return cmd_count(count_args, out);
        if (*verify)
            return cmd_verify(verify_args, out);
        if (*classes)
            return cmd_classes(classes_args, out);
        if (*tau)
            return cmd_tau(tau_args, out);
        if (*cv)
            return cmd_cv(cv_args, out);
    } catch (const InexactDivision& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace rmclass::cli
