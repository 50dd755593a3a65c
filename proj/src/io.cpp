// SPDX-License-Identifier: Apache-2.0
//
// swipt-ac: robust SWIPT power-splitting receiver with AC computing
// Copyright (C) 2026 The swipt-ac authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "swipt/io.hpp"

#include "swipt/error.hpp"

#include "json.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace swipt {

using nlohmann::json;

namespace {

std::string join_path(const std::string &prefix, const std::string &key)
{
    return prefix.empty() ? key : prefix + "." + key;
}

// Reads one JSON object, remembering which keys were consumed so that
// leftovers can be reported as unknown fields.
class ObjectReader {
public:
    ObjectReader(const json &obj, std::string prefix) : obj_(obj), prefix_(std::move(prefix))
    {
        if (!obj_.is_object())
            throw_config("config field '" + (prefix_.empty() ? std::string("<root>") : prefix_) +
                         "': expected an object");
    }

    bool has(const std::string &key) const { return obj_.contains(key); }

    const json &raw(const std::string &key)
    {
        seen_.insert(key);
        return obj_.at(key);
    }

    void number(const std::string &key, double &out)
    {
        if (!has(key))
            return;
        const json &v = raw(key);
        if (!v.is_number())
            fail(key, "expected a number");
        out = v.get<double>();
    }

    void count(const std::string &key, std::size_t &out)
    {
        if (!has(key))
            return;
        const json &v = raw(key);
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
            fail(key, "expected a non-negative integer");
        out = v.get<std::size_t>();
    }

    void u64(const std::string &key, std::uint64_t &out)
    {
        if (!has(key))
            return;
        const json &v = raw(key);
        if (!v.is_number_unsigned())
            fail(key, "expected an unsigned 64-bit integer");
        out = v.get<std::uint64_t>();
    }

    void boolean(const std::string &key, bool &out)
    {
        if (!has(key))
            return;
        const json &v = raw(key);
        if (!v.is_boolean())
            fail(key, "expected true or false");
        out = v.get<bool>();
    }

    void number_list(const std::string &key, std::vector<double> &out)
    {
        if (!has(key))
            return;
        const json &v = raw(key);
        if (!v.is_array())
            fail(key, "expected an array of numbers");
        std::vector<double> values;
        for (const auto &x : v) {
            if (!x.is_number())
                fail(key, "expected an array of numbers");
            values.push_back(x.get<double>());
        }
        out = std::move(values);
    }

    ObjectReader child(const std::string &key) { return ObjectReader(raw(key), path(key)); }

    std::string path(const std::string &key) const { return join_path(prefix_, key); }

    [[noreturn]] void fail(const std::string &key, const std::string &what) const
    {
        throw_config("config field '" + path(key) + "': " + what);
    }

    void finish() const
    {
        for (auto it = obj_.begin(); it != obj_.end(); ++it)
            if (!seen_.count(it.key()))
                throw_config("config field '" + path(it.key()) + "': unknown field");
    }

private:
    const json &obj_;
    std::string prefix_;
    std::set<std::string> seen_;
};

void read_noise(ObjectReader &r, const std::string &name, double &out_mw)
{
    const std::string dbm = name + "_dbm";
    const std::string mw = name + "_mw";
    if (r.has(dbm) && r.has(mw))
        r.fail(dbm, "give either " + dbm + " or " + mw + ", not both");
    if (r.has(dbm)) {
        double v = 0.0;
        r.number(dbm, v);
        out_mw = dbm_to_mw(v);
    }
    r.number(mw, out_mw);
}

void read_experiments(ObjectReader r, ExperimentSettings &ex)
{
    r.number("theta_ac_mw", ex.theta_ac_mw);
    r.number("theta_dc_mw", ex.theta_dc_mw);
    if (r.has("epsilon_grid_mw") && r.raw("epsilon_grid_mw").is_object()) {
        ObjectReader g = r.child("epsilon_grid_mw");
        double lo = 1e-3, hi = 3.5;
        std::size_t n = 40;
        g.number("log_min", lo);
        g.number("log_max", hi);
        g.count("count", n);
        g.finish();
        if (!(lo > 0.0 && hi >= lo && n >= 1))
            r.fail("epsilon_grid_mw", "log grid needs 0 < log_min <= log_max and count >= 1");
        ex.epsilon_grid_mw = ExperimentSettings::log_spaced(lo, hi, n);
    } else {
        r.number_list("epsilon_grid_mw", ex.epsilon_grid_mw);
    }
    r.number_list("p0_grid_dbm", ex.p0_grid_dbm);
    r.number_list("psi_list", ex.psi_list);
    r.count("realizations", ex.realizations);
    r.u64("seed", ex.seed);
    r.boolean("infeasible_as_zero", ex.infeasible_as_zero);
    r.finish();
}

RunConfig read_run_config(const json &doc)
{
    RunConfig cfg;
    ObjectReader r(doc, "");
    if (r.has("description")) {
        if (!r.raw("description").is_string())
            r.fail("description", "expected a string");
    }
    SystemConfig &s = cfg.system;
    r.count("antennas", s.antennas);
    r.number("p_dbm", s.p_dbm);
    r.number("p_circ_dbm", s.p_circ_dbm);
    read_noise(r, "sigma0_sq", s.noise.sigma0_sq_mw);
    read_noise(r, "sigma1_sq", s.noise.sigma1_sq_mw);
    r.number("psi", s.psi);
    r.number("theta_mw", s.theta_mw);
    r.number("epsilon_mw", s.epsilon_mw);
    r.number("threshold_floor_mw", s.threshold_floor_mw);
    if (r.has("eh_curve")) {
        ObjectReader c = r.child("eh_curve");
        c.number("m_eh_mw", s.curve.m_eh_mw);
        c.number("a_per_mw", s.curve.a_per_mw);
        c.number("b_mw", s.curve.b_mw);
        c.finish();
    }
    if (r.has("fading")) {
        ObjectReader f = r.child("fading");
        f.number("rician_k_db", s.fading.rician_k_db);
        f.number("pathloss_exponent", s.fading.pathloss_exponent);
        f.number("distance_m", s.fading.distance_m);
        f.finish();
    }
    if (r.has("experiments"))
        read_experiments(r.child("experiments"), cfg.experiments);
    r.finish();

    s.validate();
    cfg.experiments.validate();
    return cfg;
}

json config_to_json(const RunConfig &cfg)
{
    const SystemConfig &s = cfg.system;
    const ExperimentSettings &ex = cfg.experiments;
    return json{
        {"antennas", s.antennas},
        {"p_dbm", s.p_dbm},
        {"p_circ_dbm", s.p_circ_dbm},
        {"sigma0_sq_mw", s.noise.sigma0_sq_mw},
        {"sigma1_sq_mw", s.noise.sigma1_sq_mw},
        {"psi", s.psi},
        {"theta_mw", s.theta_mw},
        {"epsilon_mw", s.epsilon_mw},
        {"threshold_floor_mw", s.threshold_floor_mw},
        {"eh_curve", {{"m_eh_mw", s.curve.m_eh_mw}, {"a_per_mw", s.curve.a_per_mw}, {"b_mw", s.curve.b_mw}}},
        {"fading",
         {{"rician_k_db", s.fading.rician_k_db},
          {"pathloss_exponent", s.fading.pathloss_exponent},
          {"distance_m", s.fading.distance_m}}},
        {"experiments",
         {{"theta_ac_mw", ex.theta_ac_mw},
          {"theta_dc_mw", ex.theta_dc_mw},
          {"epsilon_grid_mw", ex.epsilon_grid_mw},
          {"p0_grid_dbm", ex.p0_grid_dbm},
          {"psi_list", ex.psi_list},
          {"realizations", ex.realizations},
          {"seed", ex.seed},
          {"infeasible_as_zero", ex.infeasible_as_zero}}},
    };
}

json parse_json_text(std::string_view text, const std::string &what)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw_config(what + ": not valid JSON: " + e.what());
    }
}

std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw_io("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

using Accessor = std::function<double &(RunConfig &)>;

const std::map<std::string, Accessor, std::less<>> &scalar_fields()
{
    static const std::map<std::string, Accessor, std::less<>> fields = {
        {"p_dbm", [](RunConfig &c) -> double & { return c.system.p_dbm; }},
        {"p_circ_dbm", [](RunConfig &c) -> double & { return c.system.p_circ_dbm; }},
        {"sigma0_sq_mw", [](RunConfig &c) -> double & { return c.system.noise.sigma0_sq_mw; }},
        {"sigma1_sq_mw", [](RunConfig &c) -> double & { return c.system.noise.sigma1_sq_mw; }},
        {"psi", [](RunConfig &c) -> double & { return c.system.psi; }},
        {"theta_mw", [](RunConfig &c) -> double & { return c.system.theta_mw; }},
        {"epsilon_mw", [](RunConfig &c) -> double & { return c.system.epsilon_mw; }},
        {"threshold_floor_mw", [](RunConfig &c) -> double & { return c.system.threshold_floor_mw; }},
        {"eh_curve.m_eh_mw", [](RunConfig &c) -> double & { return c.system.curve.m_eh_mw; }},
        {"eh_curve.a_per_mw", [](RunConfig &c) -> double & { return c.system.curve.a_per_mw; }},
        {"eh_curve.b_mw", [](RunConfig &c) -> double & { return c.system.curve.b_mw; }},
        {"fading.rician_k_db", [](RunConfig &c) -> double & { return c.system.fading.rician_k_db; }},
        {"fading.pathloss_exponent", [](RunConfig &c) -> double & { return c.system.fading.pathloss_exponent; }},
        {"fading.distance_m", [](RunConfig &c) -> double & { return c.system.fading.distance_m; }},
        {"experiments.theta_ac_mw", [](RunConfig &c) -> double & { return c.experiments.theta_ac_mw; }},
        {"experiments.theta_dc_mw", [](RunConfig &c) -> double & { return c.experiments.theta_dc_mw; }},
    };
    return fields;
}

bool is_whole(double v, double max)
{
    return std::isfinite(v) && v >= 0.0 && v <= max && std::floor(v) == v;
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string xml_escape(const std::string &s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

RunConfig parse_run_config(std::string_view json_text)
{
    const json doc = parse_json_text(json_text, "config");
    if (doc.is_object() && doc.contains("config") && doc.contains("outputs"))
        return read_run_config(doc.at("config"));
    return read_run_config(doc);
}

RunConfig load_run_config(const std::filesystem::path &path)
{
    const std::string text = read_file(path);
    try {
        return parse_run_config(text);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::io)
            throw;
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::string to_json(const RunConfig &config, int indent) { return config_to_json(config).dump(indent); }

void set_config_value(RunConfig &config, std::string_view key, double value)
{
    if (key == "antennas") {
        if (!is_whole(value, 1 << 20) || value < 1.0)
            throw_config("config field 'antennas': expected a positive integer");
        config.system.antennas = static_cast<std::size_t>(value);
        return;
    }
    if (key == "experiments.realizations") {
        if (!is_whole(value, 9007199254740992.0))
            throw_config("config field 'experiments.realizations': expected a non-negative integer");
        config.experiments.realizations = static_cast<std::size_t>(value);
        return;
    }
    if (key == "experiments.seed") {
        if (!is_whole(value, 9007199254740992.0))
            throw_config("config field 'experiments.seed': expected an integer below 2^53 (use the 64-bit setter)");
        config.experiments.seed = static_cast<std::uint64_t>(value);
        return;
    }
    if (key == "experiments.infeasible_as_zero") {
        config.experiments.infeasible_as_zero = value != 0.0;
        return;
    }
    if (key == "sigma0_sq_dbm") {
        config.system.noise.sigma0_sq_mw = dbm_to_mw(value);
        return;
    }
    if (key == "sigma1_sq_dbm") {
        config.system.noise.sigma1_sq_mw = dbm_to_mw(value);
        return;
    }
    const auto &fields = scalar_fields();
    const auto it = fields.find(key);
    if (it == fields.end())
        throw_config("config field '" + std::string(key) + "': unknown field");
    it->second(config) = value;
}

double get_config_value(const RunConfig &config, std::string_view key)
{
    if (key == "antennas")
        return static_cast<double>(config.system.antennas);
    if (key == "experiments.realizations")
        return static_cast<double>(config.experiments.realizations);
    if (key == "experiments.seed")
        return static_cast<double>(config.experiments.seed);
    if (key == "experiments.infeasible_as_zero")
        return config.experiments.infeasible_as_zero ? 1.0 : 0.0;
    if (key == "sigma0_sq_dbm")
        return mw_to_dbm(config.system.noise.sigma0_sq_mw);
    if (key == "sigma1_sq_dbm")
        return mw_to_dbm(config.system.noise.sigma1_sq_mw);
    const auto &fields = scalar_fields();
    const auto it = fields.find(key);
    if (it == fields.end())
        throw_config("config field '" + std::string(key) + "': unknown field");
    RunConfig copy = config;
    return it->second(copy);
}

void set_config_array(RunConfig &config, std::string_view key, std::vector<double> values)
{
    if (key == "experiments.epsilon_grid_mw")
        config.experiments.epsilon_grid_mw = std::move(values);
    else if (key == "experiments.p0_grid_dbm")
        config.experiments.p0_grid_dbm = std::move(values);
    else if (key == "experiments.psi_list")
        config.experiments.psi_list = std::move(values);
    else
        throw_config("config field '" + std::string(key) + "': not an array field");
}

ChannelEstimate parse_channel(std::string_view json_text)
{
    const json doc = parse_json_text(json_text, "channel file");
    if (!doc.is_object() || !doc.contains("h_hat") || !doc.at("h_hat").is_array())
        throw_config("channel file: expected {\"h_hat\": [[re, im], ...]}");
    ComplexVector h;
    for (const auto &entry : doc.at("h_hat")) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
            throw_config("channel file: every h_hat entry must be a [re, im] pair of numbers");
        h.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    try {
        return ChannelEstimate(std::move(h));
    } catch (const Error &e) {
        throw_config(std::string("channel file: ") + e.what());
    }
}

ChannelEstimate load_channel_file(const std::filesystem::path &path) { return parse_channel(read_file(path)); }

std::string solution_to_json(const Solution &sol, int indent)
{
    json w = json::array(), mag = json::array(), phase = json::array();
    for (const auto &x : sol.w) {
        w.push_back({x.real(), x.imag()});
        mag.push_back(std::abs(x));
        phase.push_back(std::arg(x));
    }
    json j{
        {"feasible", sol.feasible},
        {"w", w},
        {"w_magnitude", mag},
        {"w_phase_rad", phase},
        {"rho", sol.feasible ? json(sol.splits.rho) : json(nullptr)},
        {"phi", sol.feasible ? json(sol.splits.phi) : json(nullptr)},
        {"gamma_mw", sol.gamma_mw},
        {"epsilon_bar_mw", sol.epsilon_bar_mw},
        {"theta_used_mw", sol.theta_used_mw},
        {"rate_bpshz", number_or_null(sol.metrics.rate_bpshz)},
        {"sp_ac_mw", number_or_null(sol.metrics.sp_ac_mw)},
        {"eh_dc_mw", number_or_null(sol.metrics.eh_dc_mw)},
        {"diagnostics",
         {{"binding", to_string(sol.diagnostics.binding)},
          {"rho_required", sol.diagnostics.rho_required},
          {"theta_clamped", sol.diagnostics.theta_clamped},
          {"epsilon_clamped", sol.diagnostics.epsilon_clamped},
          {"message", sol.diagnostics.message}}},
    };
    return j.dump(indent);
}

void write_sweep_csv(const SweepResult &result, std::ostream &out)
{
    if (result.kind == SweepKind::region) {
        out << "epsilon_mw,scenario,mean_rate_bpshz,stderr_rate,mean_eh_mw,feasible_frac,n_feasible\n";
        for (const auto &row : result.rows)
            out << format_number(row.axis) << ',' << row.scenario << ',' << format_number(row.stats.mean_rate_bpshz)
                << ',' << format_number(row.stats.stderr_rate) << ',' << format_number(row.stats.mean_eh_mw) << ','
                << format_number(row.stats.feasible_frac()) << ',' << row.stats.n_feasible << '\n';
    } else {
        out << "p0_dbm,psi,mean_rate_bpshz,stderr_rate,feasible_frac\n";
        for (const auto &row : result.rows)
            out << format_number(row.axis) << ',' << format_number(row.psi) << ','
                << format_number(row.stats.mean_rate_bpshz) << ',' << format_number(row.stats.stderr_rate) << ','
                << format_number(row.stats.feasible_frac()) << '\n';
    }
}

std::string sha256_file(const std::filesystem::path &path)
{
    const std::string data = read_file(path);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw_io("sha256 failed for '" + path.string() + "'");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

std::string manifest_json(const RunConfig &config, std::string_view command, const std::vector<OutputFile> &outputs)
{
    json outs = json::array();
    for (const auto &o : outputs)
        outs.push_back({{"file", o.name}, {"sha256", o.sha256}});
    const auto &ex = config.experiments;
    json grids;
    if (command == "region")
        grids = {{"epsilon_grid_mw", ex.epsilon_grid_mw}, {"theta_ac_mw", ex.theta_ac_mw}, {"theta_dc_mw", ex.theta_dc_mw}};
    else
        grids = {{"p0_grid_dbm", ex.p0_grid_dbm}, {"psi_list", ex.psi_list}};
    json j{
        {"tool", "swipt"},
        {"version", kToolVersion},
        {"command", std::string(command)},
        {"seed", ex.seed},
        {"realizations", ex.realizations},
        {"grids", grids},
        {"units",
         {{"power", "mW unless the key ends in _dbm"}, {"rate", "bps/Hz"}, {"distance", "m"}}},
        {"config", config_to_json(config)},
        {"outputs", outs},
    };
    return j.dump(2) + "\n";
}

void write_sweep_svg(const SweepResult &result, std::ostream &out)
{
    const bool log_x = result.kind == SweepKind::region;
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    std::vector<std::string> order;
    for (const auto &row : result.rows) {
        if (!series.count(row.scenario))
            order.push_back(row.scenario);
        auto &pts = series[row.scenario];
        if (std::isfinite(row.stats.mean_rate_bpshz))
            pts.emplace_back(log_x ? std::log10(row.axis) : row.axis, row.stats.mean_rate_bpshz);
    }

    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto &[name, pts] : series)
        for (const auto &[x, y] : pts) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    if (!std::isfinite(x0)) {
        x0 = 0.0;
        x1 = 1.0;
        y0 = 0.0;
        y1 = 1.0;
    }
    if (x1 == x0)
        x1 = x0 + 1.0;
    if (y1 == y0)
        y1 = y0 + (y0 == 0.0 ? 1.0 : std::abs(y0) * 0.1);

    constexpr double W = 640, H = 400, L = 80, R = 150, T = 30, B = 50;
    auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
    static const char *colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    const std::string xlabel = log_x ? "DC harvest target epsilon (mW, log scale)" : "radiated power P0 (dBm)";
    out << "<text x=\"" << (L + (W - R)) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
    out << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << (T + H - B) / 2 << ")\">mean worst-case rate (bps/Hz)</text>\n";
    auto xtick = [&](double v) { return log_x ? format_number(std::pow(10.0, v)) : format_number(v); };
    out << "<text x=\"" << L << "\" y=\"" << H - B + 15 << "\" text-anchor=\"middle\">" << xtick(x0) << "</text>\n";
    out << "<text x=\"" << W - R << "\" y=\"" << H - B + 15 << "\" text-anchor=\"middle\">" << xtick(x1) << "</text>\n";
    out << "<text x=\"" << L - 4 << "\" y=\"" << H - B << "\" text-anchor=\"end\">" << std::setprecision(4) << y0 << "</text>\n";
    out << "<text x=\"" << L - 4 << "\" y=\"" << T + 4 << "\" text-anchor=\"end\">" << std::setprecision(4) << y1 << "</text>\n";

    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto &pts = series[order[k]];
        const char *color = colors[k % std::size(colors)];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto &[x, y] : pts)
            out << std::setprecision(6) << px(x) << ',' << py(y) << ' ';
        out << "\"/>\n";
        const double ly = T + 15 + 16 * static_cast<double>(k);
        out << "<line x1=\"" << W - R + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << W - R + 30 << "\" y2=\"" << ly - 4
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << W - R + 35 << "\" y=\"" << ly << "\">" << xml_escape(order[k]) << "</text>\n";
    }
    out << "</svg>\n";
}

WrittenRun write_run_outputs(const RunConfig &config, std::string_view command, const SweepResult &result,
                             const std::filesystem::path &out_dir, bool plot)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw_io("cannot create output directory '" + out_dir.string() + "': " + ec.message());

    const std::string stem = result.kind == SweepKind::region ? "region" : "csi_sweep";
    WrittenRun written;
    std::vector<OutputFile> outputs;

    auto emit = [&](const std::string &name, const std::function<void(std::ostream &)> &body) {
        const auto path = out_dir / name;
        {
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            if (!f)
                throw_io("cannot write '" + path.string() + "'");
            body(f);
            f.flush();
            if (!f)
                throw_io("write failed for '" + path.string() + "'");
        }
        return path;
    };

    written.csv = emit(stem + ".csv", [&](std::ostream &o) { write_sweep_csv(result, o); });
    outputs.push_back({written.csv.filename().string(), sha256_file(written.csv)});
    if (plot) {
        written.plot = emit(stem + ".svg", [&](std::ostream &o) { write_sweep_svg(result, o); });
        outputs.push_back({written.plot.filename().string(), sha256_file(written.plot)});
    }
    const std::string manifest = manifest_json(config, command, outputs);
    written.manifest = emit(stem + ".manifest.json", [&](std::ostream &o) { o << manifest; });
    return written;
}

} // namespace swipt
