#include "wavetraj/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "wavetraj/errors.hpp"

namespace wavetraj::io {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            default:
                out += c;
                break;
        }
    }
    return out;
}

}  // namespace

void write_csv(const Trajectory& traj, std::ostream& os) {
    if (traj.samples.empty()) {
        throw ConfigError("cli", "refusing to export an empty trajectory");
    }
    os << "t,x,z\n";
    for (const auto& s : traj.samples) {
        os << fmt17(s.t) << ',' << fmt17(s.x) << ',' << fmt17(s.z) << '\n';
    }
}

std::string to_csv(const Trajectory& traj) {
    std::ostringstream os;
    write_csv(traj, os);
    return os.str();
}

nlohmann::json to_json(const Trajectory& traj, const nlohmann::json& metadata) {
    if (traj.samples.empty()) {
        throw ConfigError("cli", "refusing to export an empty trajectory");
    }
    nlohmann::json j;
    j["params"] = {{"delta", traj.params.delta}, {"we", traj.params.we}, {"c", traj.params.c},
                   {"c0", traj.params.c0},       {"a2", traj.params.a2}, {"b", traj.params.b}};
    j["source"] = to_string(traj.source);
    auto& samples = j["samples"] = nlohmann::json::array();
    for (const auto& s : traj.samples) {
        samples.push_back({s.t, s.x, s.z});
    }
    if (!traj.breaks.empty()) j["breaks"] = traj.breaks;
    if (traj.ceiling_hit) j["ceiling_hit"] = *traj.ceiling_hit;
    if (metadata.is_object()) {
        for (auto it = metadata.begin(); it != metadata.end(); ++it) {
            j[it.key()] = it.value();
        }
    }
    return j;
}

Trajectory from_json(const nlohmann::json& j) {
    Trajectory traj;
    const auto& p = j.at("params");
    traj.params.delta = p.at("delta").get<double>();
    traj.params.we = p.at("we").get<double>();
    traj.params.c = p.at("c").get<double>();
    traj.params.c0 = p.at("c0").get<double>();
    traj.params.a2 = p.at("a2").get<double>();
    traj.params.b = p.at("b").get<double>();
    traj.source = trajectory_source_from_string(j.at("source").get<std::string>());
    for (const auto& s : j.at("samples")) {
        traj.samples.push_back({s.at(0).get<double>(), s.at(1).get<double>(), s.at(2).get<double>()});
    }
    if (j.contains("breaks")) {
        traj.breaks = j.at("breaks").get<std::vector<double>>();
    }
    if (j.contains("ceiling_hit")) {
        traj.ceiling_hit = j.at("ceiling_hit").get<double>();
    }
    return traj;
}

void write_svg(const Trajectory& traj, std::ostream& os, const SvgOptions& opt) {
    std::vector<TrajectorySample> finite;
    finite.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        if (std::isfinite(s.t) && std::isfinite(s.x) && std::isfinite(s.z)) {
            finite.push_back(s);
        }
    }
    if (finite.size() < 2) {
        throw ConfigError("cli", "svg export needs at least two finite samples");
    }

    double xmin = finite.front().x, xmax = xmin, zmin = finite.front().z, zmax = zmin;
    for (const auto& s : finite) {
        xmin = std::min(xmin, s.x);
        xmax = std::max(xmax, s.x);
        zmin = std::min(zmin, s.z);
        zmax = std::max(zmax, s.z);
    }
    double xspan = xmax - xmin;
    double zspan = zmax - zmin;
    if (xspan <= 0.0) xspan = std::max(1.0, std::fabs(xmin));
    if (zspan <= 0.0) zspan = std::max(1.0, std::fabs(zmin));
    const double xpad = opt.margin_frac * xspan;
    const double zpad = opt.margin_frac * zspan;
    const double x0 = xmin - xpad, x1 = xmax + xpad;
    const double z0 = zmin - zpad, z1 = zmax + zpad;
    const double w = opt.width, h = opt.height;

    auto px = [&](double x) { return (x - x0) / (x1 - x0) * w; };
    auto pz = [&](double z) { return h - (z - z0) / (z1 - z0) * h; };

    // Split the sample list at asymptote times so the drawn path does not
    // bridge a vertical asymptote.
    std::vector<std::vector<const TrajectorySample*>> segments(1);
    std::size_t bi = 0;
    for (const auto& s : finite) {
        while (bi < traj.breaks.size() && traj.breaks[bi] < s.t) {
            ++bi;
            if (!segments.back().empty()) segments.emplace_back();
        }
        segments.back().push_back(&s);
    }

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
       << opt.height << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n";
    if (!opt.title.empty()) os << "  <title>" << escape_xml(opt.title) << "</title>\n";
    if (!opt.desc.empty()) os << "  <desc>" << escape_xml(opt.desc) << "</desc>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height
       << "\" fill=\"#ffffff\" stroke=\"#b0b0b0\"/>\n";

    // Five ticks per axis at evenly spaced data coordinates: x along the
    // bottom edge, z along the left edge.
    for (int i = 0; i < 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        const double zv = zmin + (zmax - zmin) * i / 4.0;
        const double tx = px(xv);
        const double tz = pz(zv);
        os << "  <line x1=\"" << fmt2(tx) << "\" y1=\"" << fmt2(h - 6.0) << "\" x2=\"" << fmt2(tx)
           << "\" y2=\"" << fmt2(h) << "\" stroke=\"#808080\"/>\n";
        os << "  <text x=\"" << fmt2(tx) << "\" y=\"" << fmt2(h - 9.0)
           << "\" font-size=\"10\" fill=\"#606060\" text-anchor=\"middle\">" << fmt6(xv)
           << "</text>\n";
        os << "  <line x1=\"0\" y1=\"" << fmt2(tz) << "\" x2=\"6\" y2=\"" << fmt2(tz)
           << "\" stroke=\"#808080\"/>\n";
        os << "  <text x=\"8\" y=\"" << fmt2(tz + 3.5)
           << "\" font-size=\"10\" fill=\"#606060\">" << fmt6(zv) << "</text>\n";
    }

    for (const auto& seg : segments) {
        if (seg.size() < 2) continue;
        os << "  <polyline fill=\"none\" stroke=\"#1f6fb4\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < seg.size(); ++i) {
            if (i) os << ' ';
            os << fmt2(px(seg[i]->x)) << ',' << fmt2(pz(seg[i]->z));
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

std::string to_svg(const Trajectory& traj, const SvgOptions& opt) {
    std::ostringstream os;
    write_svg(traj, os, opt);
    return os.str();
}

void save_text(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cli", "cannot open " + path + " for writing");
    f << content;
    f.flush();
    if (!f) throw IoError("cli", "failed writing " + path);
}

}  // namespace wavetraj::io
