#include "risray/scene.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace risray {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<double> default_angle_set() {
    std::vector<double> angles;
    for (int a = -20; a <= 20; a += 5) angles.push_back(static_cast<double>(a));
    return angles;
}

int setting_count(const RisPanel& panel) {
    return static_cast<int>(panel.angle_set_deg.size());
}

static Wall panel_wall_at(const RisPanel& panel, double angle_deg) {
    const double theta = (panel.base_orientation_deg + angle_deg) * kPi / 180.0;
    const Vec2 u{std::cos(theta), std::sin(theta)};
    return Wall{{panel.pivot - u * panel.half_length, panel.pivot + u * panel.half_length},
                panel.reflection_loss_db};
}

Wall ris_segment(const RisPanel& panel, int setting_index) {
    if (setting_index < 0 || setting_index >= setting_count(panel))
        throw std::out_of_range("unknown RIS setting");
    return panel_wall_at(panel, panel.angle_set_deg[static_cast<std::size_t>(setting_index)]);
}

Wall baseline_wall(const RisPanel& panel) {
    return panel_wall_at(panel, 0.0);
}

std::vector<std::string> validate_scene(const Scene& scene) {
    std::vector<std::string> violations;
    auto bad = [&](const std::string& msg) { violations.push_back(msg); };

    if (!(scene.bounds.min.x < scene.bounds.max.x && scene.bounds.min.y < scene.bounds.max.y))
        bad("degenerate bounds");

    for (std::size_t i = 0; i < scene.walls.size(); ++i) {
        const Wall& w = scene.walls[i];
        if (w.segment.length() <= 0.0) bad("wall " + std::to_string(i) + ": zero-length segment");
        if (w.reflection_loss_db < 0.0) bad("wall " + std::to_string(i) + ": negative reflection loss");
        if (!scene.bounds.contains(w.segment.a) || !scene.bounds.contains(w.segment.b))
            bad("wall " + std::to_string(i) + ": position outside bounds");
    }

    if (scene.ris.half_length <= 0.0) bad("ris: non-positive half_length");
    if (scene.ris.reflection_loss_db < 0.0) bad("ris: negative reflection loss");
    if (scene.ris.angle_set_deg.empty()) bad("ris: empty angle set");
    for (std::size_t i = 1; i < scene.ris.angle_set_deg.size(); ++i)
        if (!(scene.ris.angle_set_deg[i - 1] < scene.ris.angle_set_deg[i])) {
            bad("ris: angle set not strictly increasing");
            break;
        }
    if (!scene.bounds.contains(scene.ris.pivot)) bad("ris: position outside bounds");

    if (scene.tx.frequency_hz <= 0.0) bad("tx: non-positive frequency");
    if (!scene.bounds.contains(scene.tx.position)) bad("tx: position outside bounds");

    if (scene.receivers.empty()) bad("no receivers");
    std::set<std::string> ids;
    for (const Receiver& rx : scene.receivers) {
        if (!scene.bounds.contains(rx.position))
            bad("receiver " + rx.id + ": position outside bounds");
        if (!ids.insert(rx.id).second) bad("duplicate receiver id " + rx.id);
    }
    return violations;
}

const char* role_name(ReceiverRole role) {
    switch (role) {
        case ReceiverRole::Detector: return "detector";
        case ReceiverRole::Subscriber: return "subscriber";
        case ReceiverRole::Victim: return "victim";
    }
    return "?";
}

ReceiverRole role_from_name(const std::string& name) {
    if (name == "detector") return ReceiverRole::Detector;
    if (name == "subscriber") return ReceiverRole::Subscriber;
    if (name == "victim") return ReceiverRole::Victim;
    throw std::invalid_argument("unknown receiver role: " + name);
}

}  // namespace risray
