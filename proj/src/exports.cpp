#include "sl4/exports.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sl4 {

using ordered_json = nlohmann::ordered_json;

std::string color_for_set(int set_id, bool is_empty_set) {
    if (is_empty_set) return "#ffffff";
    // Multiplicative hash onto a hue wheel; integer math keeps the bytes
    // identical across platforms.
    const unsigned hue = (unsigned)(set_id * 2654435761u) % 360u;
    const unsigned sector = hue / 60, rem = hue % 60;
    const unsigned v = 220, p = 70;
    const unsigned up = p + (v - p) * rem / 60;
    const unsigned down = v - (v - p) * rem / 60;
    unsigned r = 0, g = 0, b = 0;
    switch (sector) {
    case 0: r = v; g = up; b = p; break;
    case 1: r = down; g = v; b = p; break;
    case 2: r = p; g = v; b = up; break;
    case 3: r = p; g = down; b = v; break;
    case 4: r = up; g = p; b = v; break;
    default: r = v; g = p; b = down; break;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

static ordered_json mu_json(FWeight mu) {
    return ordered_json{{"m", mu.m}, {"n", mu.n}, {"k", mu.k}};
}

static ordered_json registry_json(const AltSetRegistry& reg) {
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < reg.sets.size(); ++i) {
        ordered_json elems = ordered_json::array();
        for (int e = 0; e < kWeylOrder; ++e)
            if (reg.sets[i].contains(e)) elems.push_back(all_elements()[e].word);
        arr.push_back(ordered_json{{"id", (int)i}, {"elements", elems}});
    }
    return arr;
}

std::string diagram_to_json(const Diagram& d) {
    ordered_json j;
    j["mu"] = mu_json(d.mu);
    j["registry"] = registry_json(d.registry);
    ordered_json pts = ordered_json::array();
    for (const DiagramPoint& p : d.points)
        pts.push_back(ordered_json{
            {"x", p.xyz.x}, {"y", p.xyz.y}, {"z", p.xyz.z}, {"set", p.set_id}});
    j["points"] = pts;
    return j.dump(2) + "\n";
}

std::string diagram_to_csv(const Diagram& d) {
    std::ostringstream out;
    out << "x,y,z,set_id\n";
    for (const DiagramPoint& p : d.points)
        out << p.xyz.x << "," << p.xyz.y << "," << p.xyz.z << "," << p.set_id
            << "\n";
    return out.str();
}

namespace {

constexpr long long kCell = 16;

void open_svg(std::ostringstream& out, long long w, long long h) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
        << "\">\n";
}

void emit_cell(std::ostringstream& out, const LatticeWindow& win, long long x,
               long long y, const std::string& fill) {
    const long long px = (x - win.x0) * kCell;
    const long long py = (win.y1 - y) * kCell; // y axis points up
    out << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << kCell
        << "\" height=\"" << kCell << "\" fill=\"" << fill
        << "\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";
}

} // namespace

std::string diagram_slice_to_svg(const Diagram& d, const LatticeWindow& win,
                                 long long z) {
    const long long w = (win.x1 - win.x0 + 1) * kCell;
    const long long h = (win.y1 - win.y0 + 1) * kCell;
    std::ostringstream out;
    open_svg(out, w, h);
    for (const DiagramPoint& p : d.points) {
        if (p.xyz.z != z) continue;
        emit_cell(out, win, p.xyz.x, p.xyz.y,
                  color_for_set(p.set_id, d.registry.sets[p.set_id].empty()));
    }
    out << "</svg>\n";
    return out.str();
}

std::string empty_region_to_json(FWeight mu,
                                 const std::vector<RootCoords>& pts) {
    ordered_json j;
    j["mu"] = mu_json(mu);
    ordered_json arr = ordered_json::array();
    for (const RootCoords& p : pts)
        arr.push_back(ordered_json{{"x", p.x}, {"y", p.y}, {"z", p.z}});
    j["points"] = arr;
    return j.dump(2) + "\n";
}

std::string empty_region_to_csv(const std::vector<RootCoords>& pts) {
    std::ostringstream out;
    out << "x,y,z\n";
    for (const RootCoords& p : pts)
        out << p.x << "," << p.y << "," << p.z << "\n";
    return out.str();
}

std::string empty_region_slice_to_svg(const std::vector<RootCoords>& pts,
                                      const LatticeWindow& win, long long z) {
    const long long w = (win.x1 - win.x0 + 1) * kCell;
    const long long h = (win.y1 - win.y0 + 1) * kCell;
    std::ostringstream out;
    open_svg(out, w, h);
    for (const RootCoords& p : pts) {
        if (p.z != z) continue;
        emit_cell(out, win, p.x, p.y, "#d03030");
    }
    out << "</svg>\n";
    return out.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return bool(out);
}

} // namespace sl4
