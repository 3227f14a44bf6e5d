#include "ad/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace ad {
namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' has non-numeric value '" + v + "'");
  }
}

long long to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  const long long i = static_cast<long long>(std::llround(x));
  if (x != static_cast<double>(i)) {
    throw ConfigError("config: key '" + key + "' must be an integer, got '" + v + "'");
  }
  return i;
}

std::vector<NoiseSegment> parse_segments(const std::string& v) {
  std::vector<NoiseSegment> out;
  std::stringstream ss(v);
  std::string part;
  while (std::getline(ss, part, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    std::stringstream ps(part);
    std::string a, b, c;
    if (!std::getline(ps, a, ':') || !std::getline(ps, b, ':') || !std::getline(ps, c)) {
      throw ConfigError("config: noise.segments entry '" + part +
                        "' is not start:end:D2");
    }
    NoiseSegment seg;
    seg.kStart = to_int("noise.segments", trim(a));
    seg.kEnd = to_int("noise.segments", trim(b));
    seg.D2 = to_double("noise.segments", trim(c));
    if (seg.kEnd < seg.kStart || seg.D2 < 0.0) {
      throw ConfigError("config: noise.segments entry '" + part + "' out of range");
    }
    out.push_back(seg);
  }
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  const std::map<std::string, std::function<void(const std::string&, const std::string&)>>
      setters = {
          {"plant.K", [&](auto& k, auto& v) { c.plantK = to_double(k, v); }},
          {"plant.tauC", [&](auto& k, auto& v) { c.plantTauC = to_double(k, v); }},
          {"plant.deadTime", [&](auto& k, auto& v) { c.plantDeadTime = to_double(k, v); }},
          {"plant.Ts", [&](auto& k, auto& v) { c.plantTs = to_double(k, v); }},
          {"pid.Kp", [&](auto& k, auto& v) { c.pidKp = to_double(k, v); }},
          {"pid.Ki", [&](auto& k, auto& v) { c.pidKi = to_double(k, v); }},
          {"pid.Kd", [&](auto& k, auto& v) { c.pidKd = to_double(k, v); }},
          {"sim.N", [&](auto& k, auto& v) { c.simN = to_int(k, v); }},
          {"sim.r", [&](auto& k, auto& v) { c.simR = to_double(k, v); }},
          {"noise.segments", [&](auto&, auto& v) { c.noiseSegments = parse_segments(v); }},
          {"ma.window", [&](auto& k, auto& v) { c.maWindow = static_cast<int>(to_int(k, v)); }},
          {"bw.order", [&](auto& k, auto& v) { c.bwOrder = static_cast<int>(to_int(k, v)); }},
          {"bw.cutoff", [&](auto& k, auto& v) { c.bwCutoff = to_double(k, v); }},
          {"aise.nE", [&](auto& k, auto& v) { c.aiseNe = static_cast<int>(to_int(k, v)); }},
          {"aise.nF", [&](auto& k, auto& v) { c.aiseNf = static_cast<int>(to_int(k, v)); }},
          {"aise.Rz", [&](auto& k, auto& v) { c.aiseRz = to_double(k, v); }},
          {"aise.Rd", [&](auto& k, auto& v) { c.aiseRd = to_double(k, v); }},
          {"aise.Rtheta", [&](auto& k, auto& v) { c.aiseRtheta = to_double(k, v); }},
          {"adapt.etaL", [&](auto& k, auto& v) { c.adaptEtaL = to_double(k, v); }},
          {"adapt.etaU", [&](auto& k, auto& v) { c.adaptEtaU = to_double(k, v); }},
          {"adapt.beta", [&](auto& k, auto& v) { c.adaptBeta = to_double(k, v); }},
          {"adapt.gridSize",
           [&](auto& k, auto& v) { c.adaptGridSize = static_cast<int>(to_int(k, v)); }},
          {"vrf.eta", [&](auto& k, auto& v) { c.vrfEta = to_double(k, v); }},
          {"vrf.tauN", [&](auto& k, auto& v) { c.vrfTauN = static_cast<int>(to_int(k, v)); }},
          {"vrf.tauD", [&](auto& k, auto& v) { c.vrfTauD = static_cast<int>(to_int(k, v)); }},
          {"vrf.alpha", [&](auto& k, auto& v) { c.vrfAlpha = to_double(k, v); }},
          {"er.Rinf", [&](auto& k, auto& v) { c.erRinf = to_double(k, v); }},
      };

  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" +
                        key + "'");
    }
    it->second(key, value);
  }

  // Range checks on whatever is present.
  if (c.vrfTauD && *c.vrfTauD < 6) throw ConfigError("config: vrf.tauD must be >= 6");
  if (c.vrfTauN && c.vrfTauD && *c.vrfTauD <= *c.vrfTauN) {
    throw ConfigError("config: vrf.tauD must exceed vrf.tauN");
  }
  if (c.adaptBeta && (*c.adaptBeta < 0.0 || *c.adaptBeta > 1.0)) {
    throw ConfigError("config: adapt.beta must lie in [0,1]");
  }
  if (c.bwCutoff && !(*c.bwCutoff > 0.0 && *c.bwCutoff < 3.141592653589793)) {
    throw ConfigError("config: bw.cutoff must lie in (0, pi)");
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

namespace {

template <typename T>
T require(const std::optional<T>& v, const char* key) {
  if (!v) throw ConfigError(std::string("config: missing required key '") + key + "'");
  return *v;
}

}  // namespace

AiseConfig make_aise_config(const ExperimentConfig& c, double Ts, Method method) {
  AiseConfig a;
  a.model = make_differentiator_model(Ts);
  a.ie.nE = require(c.aiseNe, "aise.nE");
  a.ie.nF = require(c.aiseNf, "aise.nF");
  a.ie.Rz = require(c.aiseRz, "aise.Rz");
  a.ie.Rd = require(c.aiseRd, "aise.Rd");
  const double rth = require(c.aiseRtheta, "aise.Rtheta");
  if (rth <= 0.0) throw ConfigError("config: aise.Rtheta must be positive");
  a.ie.Rtheta = rth * Eigen::MatrixXd::Identity(a.ie.ltheta(), a.ie.ltheta());
  a.adapt.etaL = require(c.adaptEtaL, "adapt.etaL");
  a.adapt.etaU = require(c.adaptEtaU, "adapt.etaU");
  a.adapt.beta = require(c.adaptBeta, "adapt.beta");
  a.adapt.gridSize = c.adaptGridSize;
  if (method == Method::aiseVrfEr) {
    VrfConfig v;
    v.eta = require(c.vrfEta, "vrf.eta");
    v.tauN = require(c.vrfTauN, "vrf.tauN");
    v.tauD = require(c.vrfTauD, "vrf.tauD");
    v.alpha = require(c.vrfAlpha, "vrf.alpha");
    ErConfig er;
    const double rinf = require(c.erRinf, "er.Rinf");
    if (rinf <= 0.0) throw ConfigError("config: er.Rinf must be positive");
    er.Rinf = rinf * Eigen::MatrixXd::Identity(a.ie.ltheta(), a.ie.ltheta());
    a.forgetting = {v, er};
  }
  return a;
}

LoopSetup make_loop_setup(const ExperimentConfig& c, Method method) {
  LoopSetup s;
  s.plant.Kdc = require(c.plantK, "plant.K");
  s.plant.tauC = require(c.plantTauC, "plant.tauC");
  s.plant.deadTime = require(c.plantDeadTime, "plant.deadTime");
  s.plant.Ts = require(c.plantTs, "plant.Ts");
  s.pid.Kp = require(c.pidKp, "pid.Kp");
  s.pid.Ki = require(c.pidKi, "pid.Ki");
  s.pid.Kd = require(c.pidKd, "pid.Kd");
  s.pid.Ts = s.plant.Ts;
  s.method = method;
  s.maWindow = c.maWindow;
  s.bwOrder = c.bwOrder;
  if (method == Method::bdBw) s.bwCutoff = require(c.bwCutoff, "bw.cutoff");
  if (method == Method::aise || method == Method::aiseVrfEr) {
    s.aise = make_aise_config(c, s.plant.Ts, method);
  }
  return s;
}

}  // namespace ad
