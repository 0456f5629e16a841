#include "risray/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace risray {

ScenarioConfig default_config() {
    ScenarioConfig cfg;
    Scene& s = cfg.scene;
    s.bounds = {{0.0, 0.0}, {20.0, 8.0}};
    const double wall_loss = 12.0;
    s.walls = {
        {{{0.0, 0.0}, {20.0, 0.0}}, wall_loss},   // floor
        {{{0.0, 8.0}, {20.0, 8.0}}, wall_loss},   // ceiling
        {{{0.0, 0.0}, {0.0, 8.0}}, wall_loss},    // left wall
        {{{20.0, 0.0}, {20.0, 2.0}}, wall_loss},  // right wall below the RIS aperture
        {{{20.0, 6.0}, {20.0, 8.0}}, wall_loss},  // right wall above the RIS aperture
        {{{8.0, 0.0}, {8.0, 6.0}}, wall_loss},    // partition shadowing the right half
    };
    s.ris = {{20.0, 4.0}, 2.0, 90.0, default_angle_set(), 1.0};
    s.tx = {{2.0, 7.0}, 20.0, 3.5e9};
    s.receivers = {
        {"A", {16.0, 1.0}, ReceiverRole::Detector, -58.0},
        {"B", {13.0, 1.0}, ReceiverRole::Subscriber, -57.0},
        {"C", {10.0, 2.5}, ReceiverRole::Victim, -60.0},
    };
    return cfg;
}

namespace {

struct Parser {
    std::string name;
    int lineno = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + msg);
    }

    double number(const std::string& text) const {
        try {
            std::size_t pos = 0;
            const double v = std::stod(text, &pos);
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos != text.size()) fail("trailing characters in number '" + text + "'");
            return v;
        } catch (const std::invalid_argument&) {
            fail("not a number: '" + text + "'");
        } catch (const std::out_of_range&) {
            fail("number out of range: '" + text + "'");
        }
    }

    std::vector<std::string> split(const std::string& text, char sep) const {
        std::vector<std::string> fields;
        std::istringstream in(text);
        std::string field;
        while (std::getline(in, field, sep)) fields.push_back(trim(field));
        return fields;
    }

    std::vector<double> numbers(const std::string& text, std::size_t count) const {
        const auto fields = split(text, ',');
        if (fields.size() != count)
            fail("expected " + std::to_string(count) + " comma-separated values");
        std::vector<double> out;
        for (const std::string& f : fields) out.push_back(number(f));
        return out;
    }

    static std::string trim(const std::string& s) {
        std::size_t b = 0, e = s.size();
        while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
        return s.substr(b, e - b);
    }

    // `start:stop:step` range or explicit comma list.
    std::vector<double> angle_set(const std::string& text) const {
        if (text.find(':') != std::string::npos) {
            const auto parts = split(text, ':');
            if (parts.size() != 3) fail("angle range must be start:stop:step");
            const double start = number(parts[0]);
            const double stop = number(parts[1]);
            const double step = number(parts[2]);
            if (step <= 0.0 || stop < start) fail("bad angle range");
            std::vector<double> angles;
            for (double a = start; a <= stop + 1e-9; a += step) angles.push_back(a);
            return angles;
        }
        const auto fields = split(text, ',');
        std::vector<double> angles;
        for (const std::string& f : fields) angles.push_back(number(f));
        return angles;
    }
};

}  // namespace

ScenarioConfig parse_scenario(const std::string& text, const std::string& name) {
    ScenarioConfig cfg = default_config();
    Parser p{name};
    std::istringstream in(text);
    std::string line;
    std::string section;
    bool walls_reset = false;
    bool receivers_reset = false;

    while (std::getline(in, line)) {
        ++p.lineno;
        std::string s = Parser::trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']') p.fail("unterminated section header");
            section = s.substr(1, s.size() - 2);
            if (section != "scene" && section != "propagation" && section != "simulation")
                p.fail("unknown section [" + section + "]");
            continue;
        }
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos) p.fail("expected 'key = value'");
        const std::string key = Parser::trim(s.substr(0, eq));
        const std::string value = Parser::trim(s.substr(eq + 1));
        if (section.empty()) p.fail("key outside any section");

        if (section == "scene") {
            Scene& sc = cfg.scene;
            if (key == "bounds") {
                const auto v = p.numbers(value, 4);
                sc.bounds = {{v[0], v[1]}, {v[2], v[3]}};
            } else if (key == "wall") {
                if (!walls_reset) { sc.walls.clear(); walls_reset = true; }
                const auto v = p.numbers(value, 5);
                sc.walls.push_back({{{v[0], v[1]}, {v[2], v[3]}}, v[4]});
            } else if (key == "receiver") {
                if (!receivers_reset) { sc.receivers.clear(); receivers_reset = true; }
                const auto fields = p.split(value, ',');
                if (fields.size() != 5) p.fail("receiver needs id,x,y,role,threshold_dbm");
                Receiver rx;
                rx.id = fields[0];
                rx.position = {p.number(fields[1]), p.number(fields[2])};
                try {
                    rx.role = role_from_name(fields[3]);
                } catch (const std::invalid_argument& e) {
                    p.fail(e.what());
                }
                rx.threshold_dbm = p.number(fields[4]);
                sc.receivers.push_back(rx);
            } else if (key == "ris.pivot") {
                const auto v = p.numbers(value, 2);
                sc.ris.pivot = {v[0], v[1]};
            } else if (key == "ris.half_length") {
                sc.ris.half_length = p.number(value);
            } else if (key == "ris.base_orientation_deg") {
                sc.ris.base_orientation_deg = p.number(value);
            } else if (key == "ris.angles") {
                sc.ris.angle_set_deg = p.angle_set(value);
            } else if (key == "ris.reflection_loss_db") {
                sc.ris.reflection_loss_db = p.number(value);
            } else if (key == "tx.position") {
                const auto v = p.numbers(value, 2);
                sc.tx.position = {v[0], v[1]};
            } else if (key == "tx.power_dbm") {
                sc.tx.power_dbm = p.number(value);
            } else if (key == "tx.frequency_hz") {
                sc.tx.frequency_hz = p.number(value);
            } else {
                p.fail("unknown key '" + key + "' in [scene]");
            }
        } else if (section == "propagation") {
            if (key == "max_order") {
                cfg.propagation.max_order = static_cast<int>(p.number(value));
                if (cfg.propagation.max_order < 0) p.fail("max_order must be >= 0");
            } else if (key == "power_floor_dbm") {
                cfg.propagation.power_floor_dbm = p.number(value);
            } else {
                p.fail("unknown key '" + key + "' in [propagation]");
            }
        } else {  // simulation
            if (key == "policy") {
                if (value != "static" && value != "sweep" && value != "context")
                    p.fail("policy must be static, sweep or context");
                cfg.simulation.policy = value;
            } else if (key == "static_angle_deg") {
                cfg.simulation.static_angle_deg = p.number(value);
            } else if (key == "dwell") {
                cfg.simulation.dwell = static_cast<int>(p.number(value));
                if (cfg.simulation.dwell < 1) p.fail("dwell must be >= 1");
            } else if (key == "intervals") {
                cfg.simulation.intervals = static_cast<int>(p.number(value));
                if (cfg.simulation.intervals < 1) p.fail("intervals must be >= 1");
            } else if (key == "map_resolution") {
                cfg.simulation.map_resolution = p.number(value);
                if (cfg.simulation.map_resolution <= 0.0) p.fail("map_resolution must be > 0");
            } else {
                p.fail("unknown key '" + key + "' in [simulation]");
            }
        }
    }

    const auto violations = validate_scene(cfg.scene);
    if (!violations.empty()) {
        std::string msg = name + ": invalid scene:";
        for (const std::string& v : violations) msg += "\n  - " + v;
        throw std::runtime_error(msg);
    }
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config not found: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string dump_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    const Scene& s = cfg.scene;
    out << "[scene]\n";
    out << "bounds = " << num(s.bounds.min.x) << "," << num(s.bounds.min.y) << ","
        << num(s.bounds.max.x) << "," << num(s.bounds.max.y) << "\n";
    for (const Wall& w : s.walls)
        out << "wall = " << num(w.segment.a.x) << "," << num(w.segment.a.y) << ","
            << num(w.segment.b.x) << "," << num(w.segment.b.y) << ","
            << num(w.reflection_loss_db) << "\n";
    out << "ris.pivot = " << num(s.ris.pivot.x) << "," << num(s.ris.pivot.y) << "\n";
    out << "ris.half_length = " << num(s.ris.half_length) << "\n";
    out << "ris.base_orientation_deg = " << num(s.ris.base_orientation_deg) << "\n";
    out << "ris.angles = ";
    for (std::size_t i = 0; i < s.ris.angle_set_deg.size(); ++i)
        out << (i ? "," : "") << num(s.ris.angle_set_deg[i]);
    out << "\n";
    out << "ris.reflection_loss_db = " << num(s.ris.reflection_loss_db) << "\n";
    out << "tx.position = " << num(s.tx.position.x) << "," << num(s.tx.position.y) << "\n";
    out << "tx.power_dbm = " << num(s.tx.power_dbm) << "\n";
    out << "tx.frequency_hz = " << num(s.tx.frequency_hz) << "\n";
    for (const Receiver& rx : s.receivers)
        out << "receiver = " << rx.id << "," << num(rx.position.x) << "," << num(rx.position.y)
            << "," << role_name(rx.role) << "," << num(rx.threshold_dbm) << "\n";
    out << "\n[propagation]\n";
    out << "max_order = " << cfg.propagation.max_order << "\n";
    out << "power_floor_dbm = " << num(cfg.propagation.power_floor_dbm) << "\n";
    out << "\n[simulation]\n";
    out << "policy = " << cfg.simulation.policy << "\n";
    out << "static_angle_deg = " << num(cfg.simulation.static_angle_deg) << "\n";
    out << "dwell = " << cfg.simulation.dwell << "\n";
    out << "intervals = " << cfg.simulation.intervals << "\n";
    out << "map_resolution = " << num(cfg.simulation.map_resolution) << "\n";
    return out.str();
}

}  // namespace risray
