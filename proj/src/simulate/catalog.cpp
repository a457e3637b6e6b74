#include "hometap/simulate/catalog.hpp"

namespace hometap::simulate {

namespace {

LengthDist constant(int bytes) {
    LengthDist d;
    d.kind = LengthDist::Kind::Constant;
    d.constant_bytes = bytes;
    return d;
}

LengthDist uniform(int lo, int hi) {
    LengthDist d;
    d.kind = LengthDist::Kind::UniformRange;
    d.min_bytes = lo;
    d.max_bytes = hi;
    return d;
}

LengthDist categorical(std::initializer_list<std::pair<int, double>> cats) {
    LengthDist d;
    d.kind = LengthDist::Kind::Categorical;
    d.categories = cats;
    return d;
}

BurstModel burst(double dur, int mean, int spread, LengthDist len, double in_frac) {
    BurstModel b;
    b.duration_s = dur;
    b.count_mean = mean;
    b.count_spread = spread;
    b.length = std::move(len);
    b.incoming_fraction = in_frac;
    return b;
}

}  // namespace

std::vector<DeviceArchetype> builtin_catalog() {
    std::vector<DeviceArchetype> cat;

    {
        DeviceArchetype a;
        a.identity = {"Nimbus", "camera"};
        a.protocol = core::Protocol::WiFi;
        a.heartbeat = {2.0, 0.2, constant(120)};
        a.actions["live-view"] = burst(20.0, 400, 40, uniform(800, 1200), 0.15);
        a.actions["reboot"] = burst(10.0, 80, 10, uniform(300, 500), 0.5);
        a.min_burst_rate_ratio = 8.0;
        cat.push_back(a);
    }
    {
        DeviceArchetype a;
        a.identity = {"Volta", "plug"};
        a.protocol = core::Protocol::WiFi;
        a.heartbeat = {4.0, 0.4, constant(90)};
        a.actions["on"] = burst(16.0, 48, 8, categorical({{220, 1.0}, {260, 1.0}}), 0.4);
        a.actions["off"] = burst(16.0, 48, 8, categorical({{140, 1.0}, {160, 1.0}}), 0.4);
        a.initial_state = "off";
        a.min_burst_rate_ratio = 6.0;
        cat.push_back(a);
    }
    {
        DeviceArchetype a;
        a.identity = {"Pocket", "controller"};
        a.protocol = core::Protocol::WiFi;
        a.heartbeat = {3.0, 0.3, constant(150)};
        a.actions["app-command"] = burst(8.0, 40, 8, uniform(400, 700), 0.5);
        a.min_burst_rate_ratio = 6.0;
        cat.push_back(a);
    }
    {
        DeviceArchetype a;
        a.identity = {"Harbor", "hub"};
        a.protocol = core::Protocol::ZigBee;
        a.heartbeat = {1.5, 0.15, constant(70)};
        a.actions["broadcast"] = burst(5.0, 25, 5, uniform(100, 140), 0.0);
        a.min_burst_rate_ratio = 3.0;
        cat.push_back(a);
    }
    {
        DeviceArchetype a;
        a.identity = {"Ember", "outlet"};
        a.protocol = core::Protocol::ZigBee;
        a.heartbeat = {6.0, 0.5, constant(55)};
        a.quirks.zigbee_repeater_period_s = 15.0;  // repeats the hub broadcast
        a.actions["on"] = burst(18.0, 36, 6, constant(180), 0.3);
        a.actions["off"] = burst(18.0, 36, 6, constant(120), 0.3);
        a.initial_state = "off";
        a.min_burst_rate_ratio = 4.0;
        cat.push_back(a);
    }
    {
        DeviceArchetype a;
        a.identity = {"Prowl", "motion-sensor"};
        a.protocol = core::Protocol::ZigBee;
        a.heartbeat = {8.0, 0.8, constant(45)};
        a.actions["motion"] = burst(15.0, 35, 6, uniform(95, 125), 0.2);
        a.min_burst_rate_ratio = 8.0;
        cat.push_back(a);
    }
    {
        DeviceArchetype a;
        a.identity = {"Sill", "door-sensor"};
        a.protocol = core::Protocol::ZigBee;
        a.heartbeat = {10.0, 1.0, constant(40)};
        a.actions["open"] = burst(10.0, 24, 4, constant(100), 0.2);
        a.actions["close"] = burst(10.0, 24, 4, constant(70), 0.2);
        a.initial_state = "closed";
        a.min_burst_rate_ratio = 10.0;
        cat.push_back(a);
    }
    {
        DeviceArchetype a;
        a.identity = {"Lumen", "lux-sensor"};
        a.protocol = core::Protocol::ZigBee;
        a.heartbeat = {7.0, 0.7, constant(65)};
        a.actions["lux-change"] = burst(10.0, 26, 4, constant(88), 0.2);
        a.min_burst_rate_ratio = 8.0;
        cat.push_back(a);
    }
    {
        DeviceArchetype a;
        a.identity = {"Keystone", "lock"};
        a.protocol = core::Protocol::BLE;
        a.heartbeat = {12.0, 1.0, constant(30)};
        a.quirks.ble_advertising_hz = 0.2;
        a.actions["lock"] = burst(14.0, 30, 5, uniform(60, 90), 0.5);
        a.actions["unlock"] = burst(14.0, 30, 5, uniform(130, 170), 0.5);
        a.initial_state = "locked";
        a.min_burst_rate_ratio = 3.0;
        cat.push_back(a);
    }
    {
        DeviceArchetype a;
        a.identity = {"Gram", "scale"};
        a.protocol = core::Protocol::BLE;
        a.heartbeat = {20.0, 2.0, constant(25)};
        a.quirks.ble_advertising_hz = 0.1;
        a.actions["measure"] = burst(25.0, 70, 10, uniform(240, 320), 0.3);
        a.min_burst_rate_ratio = 8.0;
        cat.push_back(a);
    }
    {
        DeviceArchetype a;
        a.identity = {"Aura", "bridge"};
        a.protocol = core::Protocol::WiFi;
        a.heartbeat = {5.0, 0.5, constant(110)};
        a.actions["scene-on"] = burst(12.0, 44, 8, constant(330), 0.35);
        a.actions["scene-off"] = burst(12.0, 44, 8, constant(210), 0.35);
        a.initial_state = "scene-off";
        a.min_burst_rate_ratio = 8.0;
        cat.push_back(a);
    }

    return cat;
}

}  // namespace hometap::simulate
