#include "omitsim/csv_io.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>

#include "omitsim/errors.hpp"
#include "omitsim/units.hpp"
#include "omitsim/version.hpp"

namespace omitsim {

std::string format_g17(double v) {
    char buf[40];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

struct Columns {
    std::vector<std::string> headers;
    // appends the observable fields of `row` (without axis/error markers)
    std::vector<std::string> values(const SweepRow& row,
                                    const std::vector<Observable>& outs) {
        std::vector<std::string> v;
        auto put = [&](double x) {
            v.push_back(row.failed ? std::string{} : format_g17(x));
        };
        for (Observable o : outs) {
            switch (o) {
            case Observable::T_sq: put(row.T_sq); break;
            case Observable::phi: put(row.phi_t); break;
            case Observable::tau_g: put(row.tau_g); break;
            case Observable::c_minus:
                put(row.c_minus.real());
                put(row.c_minus.imag());
                break;
            case Observable::steady:
                put(row.n_s);
                put(angular_to_cyclic(row.delta_tilde));
                put(row.c_s.real());
                put(row.c_s.imag());
                break;
            }
        }
        return v;
    }
};

std::vector<std::string> observable_headers(const std::vector<Observable>& outs) {
    std::vector<std::string> h;
    for (Observable o : outs) {
        switch (o) {
        case Observable::T_sq: h.push_back("T_sq"); break;
        case Observable::phi: h.push_back("phi_t"); break;
        case Observable::tau_g: h.push_back("tau_g"); break;
        case Observable::c_minus:
            h.push_back("re_c_minus");
            h.push_back("im_c_minus");
            break;
        case Observable::steady:
            h.push_back("n_s");
            h.push_back("delta_tilde_hz");
            h.push_back("re_c_s");
            h.push_back("im_c_s");
            break;
        }
    }
    return h;
}

std::string iso8601_now_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

OutputManifest write_outputs(const SweepResult& result,
                             const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw io_error("write_outputs: cannot create " + out_dir);

    const Scenario& s = result.scenario;
    OutputManifest m;
    m.csv_path = (fs::path(out_dir) / (s.name + ".csv")).string();
    m.plot_path = (fs::path(out_dir) / (s.name + ".plot")).string();
    m.meta_path = (fs::path(out_dir) / (s.name + ".meta")).string();

    const std::string axis_col = axis_column(s.axis.quantity);
    const auto obs_headers = observable_headers(s.outputs);

    {
        std::ofstream f(m.csv_path, std::ios::binary);
        if (!f) throw io_error("write_outputs: cannot open " + m.csv_path);
        f << axis_col;
        for (const auto& h : obs_headers) f << ',' << h;
        f << ",error\n";
        Columns cols;
        for (const auto& row : result.rows) {
            f << format_g17(row.axis_value);
            for (const auto& v : cols.values(row, s.outputs)) f << ',' << v;
            f << ',' << (row.failed ? '1' : '0') << '\n';
        }
        if (!f) throw io_error("write_outputs: write failed for " + m.csv_path);
    }
    {
        std::ofstream f(m.plot_path, std::ios::binary);
        if (!f) throw io_error("write_outputs: cannot open " + m.plot_path);
        f << "csv " << s.name << ".csv\n";
        f << "title " << s.name << "\n";
        f << "xlabel " << axis_col << "\n";
        f << "ylabel " << (obs_headers.empty() ? "value" : obs_headers.front())
          << "\n";
        for (const auto& h : obs_headers)
            f << "series " << h << " " << axis_col << " " << h << "\n";
    }
    {
        std::ofstream f(m.meta_path, std::ios::binary);
        if (!f) throw io_error("write_outputs: cannot open " + m.meta_path);
        f << "tool_version = " << result.tool_version << "\n";
        f << "scenario = " << s.name << "\n";
        f << "variant = " << variant_name(s.variant) << "\n";
        f << "tolerance_profile = " << result.tolerance_profile << "\n";
        f << "rows = " << result.rows.size() << "\n";
        f << "failed_points = " << result.failed_points << "\n";
        f << "timestamp_utc = " << iso8601_now_utc() << "\n";
    }
    return m;
}

} // namespace omitsim
