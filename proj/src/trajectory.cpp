#include "trackrect/trajectory.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "trackrect/errors.hpp"

namespace trackrect {

namespace {

using nlohmann::json;

double number_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number())
    throw InputError(where + ": missing numeric field '" + key + "'");
  return obj[key].get<double>();
}

int int_field(const json& obj, const char* key, const std::string& where) {
  const double v = number_field(obj, key, where);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw InputError(where + ": field '" + key + "' must be an integer");
  return i;
}

}  // namespace

TrajectoryFile load_trajectories(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open trajectory file " + path.string());

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("trajectory file " + path.string() + ": " + e.what());
  }
  const std::string where = path.string();
  if (!doc.is_object()) throw InputError(where + ": expected a JSON object");
  if (!doc.contains("video_id") || !doc["video_id"].is_string())
    throw InputError(where + ": missing string field 'video_id'");
  if (!doc.contains("resolution") || !doc["resolution"].is_array() ||
      doc["resolution"].size() != 2)
    throw InputError(where + ": 'resolution' must be [width, height]");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw InputError(where + ": missing array field 'points'");

  TrajectoryFile file;
  file.video_id = doc["video_id"].get<std::string>();
  file.width = doc["resolution"][0].get<int>();
  file.height = doc["resolution"][1].get<int>();
  file.num_frames = int_field(doc, "num_frames", where);
  if (file.width < 1 || file.height < 1) throw InputError(where + ": bad resolution");
  if (file.num_frames < 1) throw InputError(where + ": num_frames must be >= 1");
  if (doc.contains("camera_moving")) {
    if (!doc["camera_moving"].is_boolean())
      throw InputError(where + ": 'camera_moving' must be a boolean");
    file.camera_moving = doc["camera_moving"].get<bool>();
  }

  file.points.reserve(doc["points"].size());
  for (std::size_t i = 0; i < doc["points"].size(); ++i) {
    const json& p = doc["points"][i];
    const std::string ctx = where + ": points[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("query") || !p.contains("track") || !p["track"].is_array())
      throw InputError(ctx + ": expected {query, track[]}");

    Trajectory traj;
    traj.query.frame = int_field(p["query"], "frame", ctx + ".query");
    traj.query.x = number_field(p["query"], "x", ctx + ".query");
    traj.query.y = number_field(p["query"], "y", ctx + ".query");
    if (traj.query.frame < 0 || traj.query.frame >= file.num_frames)
      throw InputError(ctx + ": query frame out of range");
    if (traj.query.x < 0.0 || traj.query.x >= file.width || traj.query.y < 0.0 ||
        traj.query.y >= file.height)
      throw InputError(ctx + ": query position outside frame bounds");

    if (static_cast<int>(p["track"].size()) != file.num_frames)
      throw InputError(ctx + ": track must cover every frame (expected " +
                       std::to_string(file.num_frames) + " entries, got " +
                       std::to_string(p["track"].size()) + ")");
    traj.points.reserve(p["track"].size());
    for (int t = 0; t < file.num_frames; ++t) {
      const json& e = p["track"][t];
      const std::string ectx = ctx + ".track[" + std::to_string(t) + "]";
      TrackPoint pt;
      pt.frame = int_field(e, "frame", ectx);
      pt.x = number_field(e, "x", ectx);
      pt.y = number_field(e, "y", ectx);
      if (!e.contains("visible") || !e["visible"].is_boolean())
        throw InputError(ectx + ": missing boolean field 'visible'");
      pt.visible = e["visible"].get<bool>();
      if (pt.frame != t) throw InputError(ectx + ": frames must run 0..n-1 in order");
      traj.points.push_back(pt);
    }
    file.points.push_back(std::move(traj));
  }
  return file;
}

void save_trajectories(const std::filesystem::path& path, const TrajectoryFile& trajectories) {
  json doc;
  doc["video_id"] = trajectories.video_id;
  doc["resolution"] = {trajectories.width, trajectories.height};
  doc["num_frames"] = trajectories.num_frames;
  if (trajectories.camera_moving) doc["camera_moving"] = *trajectories.camera_moving;
  json points = json::array();
  for (const Trajectory& traj : trajectories.points) {
    json track = json::array();
    for (const TrackPoint& pt : traj.points)
      track.push_back({{"frame", pt.frame}, {"x", pt.x}, {"y", pt.y}, {"visible", pt.visible}});
    points.push_back({{"query", {{"frame", traj.query.frame}, {"x", traj.query.x}, {"y", traj.query.y}}},
                      {"track", std::move(track)}});
  }
  doc["points"] = std::move(points);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write trajectory file " + path.string());
  out << doc.dump(1) << "\n";
}

}  // namespace trackrect
