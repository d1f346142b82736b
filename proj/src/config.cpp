#include "mscheme/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mscheme {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw UnknownKey("unknown key \"" + it.key() + "\" in " + where);
    }
}

double get_number(const json& obj, const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ValidationError("key \"" + key + "\" must be a number");
    return v.get<double>();
}

int get_int(const json& obj, const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        throw ValidationError("key \"" + key + "\" must be an integer");
    return v.get<int>();
}

std::string get_string(const json& obj, const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_string())
        throw ValidationError("key \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Complex get_complex(const json& obj, const std::string& key) {
    const json& v = obj.at(key);
    if (v.is_number()) return Complex(v.get<double>());
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return Complex(v[0].get<double>(), v[1].get<double>());
    throw ValidationError("key \"" + key + "\" must be a number or [re, im] pair");
}

void apply_params(SystemParams& p, const json& obj) {
    check_keys(obj,
               {"omega1", "omega2", "omega3", "omega4", "delta1", "delta2", "delta3", "delta4",
                "gamma12", "gamma23", "gamma25", "gamma14", "gamma34", "gamma45", "gamma_d",
                "topology", "lock_delta4_to_delta3"},
               "params");
    static const char* omegas[] = {"omega1", "omega2", "omega3", "omega4"};
    static const char* deltas[] = {"delta1", "delta2", "delta3", "delta4"};
    for (int k = 0; k < 4; ++k) {
        if (obj.contains(omegas[k])) p.rabi[k] = get_complex(obj, omegas[k]);
        if (obj.contains(deltas[k])) p.detuning[k] = get_number(obj, deltas[k]);
    }
    if (obj.contains("gamma12")) p.decay.g12 = get_number(obj, "gamma12");
    if (obj.contains("gamma23")) p.decay.g23 = get_number(obj, "gamma23");
    if (obj.contains("gamma25")) p.decay.g25 = get_number(obj, "gamma25");
    if (obj.contains("gamma14")) p.decay.g14 = get_number(obj, "gamma14");
    if (obj.contains("gamma34")) p.decay.g34 = get_number(obj, "gamma34");
    if (obj.contains("gamma45")) p.decay.g45 = get_number(obj, "gamma45");
    if (obj.contains("gamma_d")) p.dephasing = get_number(obj, "gamma_d");
    if (obj.contains("topology")) {
        const std::string t = get_string(obj, "topology");
        if (t == "m_scheme")
            p.topology = CouplingMap::m_scheme();
        else if (t == "variant")
            p.topology = CouplingMap::variant();
        else
            throw ValidationError("topology must be \"m_scheme\" or \"variant\", got \"" + t + "\"");
    }
    if (obj.contains("lock_delta4_to_delta3")) {
        const json& v = obj.at("lock_delta4_to_delta3");
        if (!v.is_boolean()) throw ValidationError("lock_delta4_to_delta3 must be a boolean");
        if (v.get<bool>()) p.detuning[3] = p.detuning[2];
    }
}

SweepAxis parse_axis(const json& obj) {
    check_keys(obj, {"parameter", "start", "stop", "points", "values"}, "axis");
    if (!obj.contains("parameter")) throw ValidationError("axis block needs a \"parameter\" key");
    SweepAxis axis;
    axis.parameter = sweep_parameter_from_string(get_string(obj, "parameter"));
    if (obj.contains("values")) {
        if (obj.contains("start") || obj.contains("stop") || obj.contains("points"))
            throw ValidationError("axis: give either \"values\" or start/stop/points, not both");
        const json& vals = obj.at("values");
        if (!vals.is_array()) throw ValidationError("axis values must be an array");
        for (const auto& v : vals) {
            if (!v.is_number()) throw ValidationError("axis values must be numbers");
            axis.values.push_back(v.get<double>());
        }
    } else {
        if (!obj.contains("start") || !obj.contains("stop") || !obj.contains("points"))
            throw ValidationError("axis block needs start, stop and points (or values)");
        axis = SweepAxis::uniform(axis.parameter, get_number(obj, "start"),
                                  get_number(obj, "stop"), get_int(obj, "points"));
    }
    axis.validate();
    return axis;
}

RampSpec parse_ramp(const json& obj, int& samples_out) {
    check_keys(obj, {"target", "start", "end", "duration", "shape", "samples"}, "ramp");
    RampSpec ramp;
    if (obj.contains("target")) {
        const std::string t = get_string(obj, "target");
        if (t == "delta3")
            ramp.target = RampTarget::kDelta3;
        else if (t == "delta3_delta4_locked")
            ramp.target = RampTarget::kDelta3Delta4Locked;
        else
            throw ValidationError("ramp target must be \"delta3\" or \"delta3_delta4_locked\"");
    }
    if (!obj.contains("start") || !obj.contains("end") || !obj.contains("duration"))
        throw ValidationError("ramp block needs start, end and duration");
    ramp.start_value = get_number(obj, "start");
    ramp.end_value = get_number(obj, "end");
    ramp.duration = get_number(obj, "duration");
    if (ramp.duration <= 0) throw ValidationError("ramp duration must be > 0");
    if (obj.contains("shape")) {
        const std::string s = get_string(obj, "shape");
        if (s == "linear")
            ramp.shape = RampShape::kLinear;
        else if (s == "smoothstep")
            ramp.shape = RampShape::kSmoothstep;
        else
            throw ValidationError("ramp shape must be \"linear\" or \"smoothstep\"");
    }
    if (obj.contains("samples")) {
        samples_out = get_int(obj, "samples");
        if (samples_out < 2) throw ValidationError("ramp samples must be >= 2");
    }
    return ramp;
}

json parse_override_value(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception&) {
        return json(text);  // bare strings allowed
    }
}

void apply_override(json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ValidationError("--set expects key=value, got \"" + assignment + "\"");
    const std::string path = assignment.substr(0, eq);
    const json value = parse_override_value(assignment.substr(eq + 1));

    json* node = &doc;
    std::stringstream ss(path);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, '.')) parts.push_back(part);
    if (parts.empty()) throw ValidationError("--set key must be nonempty");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) node = &((*node)[parts[i]]);
    (*node)[parts.back()] = value;
}

}  // namespace

RunSpec parse_config(const std::string& json_text, const std::vector<std::string>& overrides,
                     const std::string& command_arg) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("config is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw ParseError("config document must be a JSON object");
    for (const auto& o : overrides) apply_override(doc, o);

    check_keys(doc, {"preset", "command", "params", "axis", "ramp", "time", "channel", "output"},
               "config");

    RunSpec spec;
    if (doc.contains("preset")) {
        spec.preset_name = get_string(doc, "preset");
        const Preset& preset = preset_by_name(spec.preset_name);
        spec.params = preset.params;
        spec.command = preset.default_command;
        spec.axis = preset.default_axis;
        spec.channel = preset.default_channel;
    }

    std::optional<Command> requested;
    if (doc.contains("command")) requested = command_from_string(get_string(doc, "command"));
    if (!command_arg.empty()) {
        const Command cli_cmd = command_from_string(command_arg);
        if (requested && *requested != cli_cmd)
            throw ValidationError("config command \"" + to_string(*requested) +
                                  "\" conflicts with CLI subcommand \"" + command_arg + "\"");
        requested = cli_cmd;
    }
    if (requested) spec.command = *requested;

    if (doc.contains("params")) {
        const json& p = doc.at("params");
        if (!p.is_object()) throw ValidationError("params block must be an object");
        apply_params(spec.params, p);
    }
    if (doc.contains("axis")) spec.axis = parse_axis(doc.at("axis"));
    if (doc.contains("ramp")) spec.ramp = parse_ramp(doc.at("ramp"), spec.ramp_samples);
    if (doc.contains("time")) {
        const json& t = doc.at("time");
        check_keys(t, {"t_end", "samples", "initial_level"}, "time");
        if (t.contains("t_end")) spec.t_end = get_number(t, "t_end");
        if (t.contains("samples")) spec.time_samples = get_int(t, "samples");
        if (t.contains("initial_level")) {
            spec.initial_level = LevelIndex{get_int(t, "initial_level")};
            if (!spec.initial_level.valid())
                throw ValidationError("initial_level must be in 1..5");
        }
        if (spec.t_end <= 0) throw ValidationError("t_end must be > 0");
        if (spec.time_samples < 2) throw ValidationError("time samples must be >= 2");
    }
    if (doc.contains("channel")) {
        const json& c = doc.at("channel");
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
            throw ValidationError("channel must be a [source, target] level pair");
        spec.channel = {LevelIndex{c[0].get<int>()}, LevelIndex{c[1].get<int>()}};
        if (!spec.channel.first.is_excited() || !spec.channel.second.is_ground())
            throw ValidationError("channel must pair an excited source with a ground target");
    }
    if (doc.contains("output")) spec.output_path = get_string(doc, "output");

    spec.params.validate();
    if (spec.command == Command::kSweep && !spec.axis)
        throw ValidationError("sweep command needs an axis block or a preset with one");
    if (spec.command == Command::kRamp && !spec.ramp)
        throw ValidationError("ramp command needs a ramp block");
    return spec;
}

RunSpec parse_config_file(const std::string& path, const std::vector<std::string>& overrides,
                          const std::string& command_arg) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config \"" + path + "\"");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), overrides, command_arg);
}

}  // namespace mscheme
