#pragma once

#include "fourplanar/drawing.hpp"

namespace fixtures {

using fourplanar::DrawingSpec;
using fourplanar::EdgeEnd;

// Plain triangle, no crossings.
inline DrawingSpec triangle() {
  DrawingSpec s;
  s.vertices = {"v1", "v2", "v3"};
  s.edges.push_back({"e12", "v1", "v2", {}});
  s.edges.push_back({"e23", "v2", "v3", {}});
  s.edges.push_back({"e31", "v3", "v1", {}});
  s.rotations["v1"] = {{"e12", false}, {"e31", true}};
  s.rotations["v2"] = {{"e23", false}, {"e12", true}};
  s.rotations["v3"] = {{"e31", false}, {"e23", true}};
  return s;
}

// Edges uv and xy crossing once at c1, closed up by arcs ux and vy.
// Geometry: u=(-2,0), v=(2,0), x=(0,-2), y=(0,2); ux and vy drawn outside.
inline DrawingSpec single_crossing() {
  DrawingSpec s;
  s.vertices = {"u", "v", "x", "y"};
  s.edges.push_back({"euv", "u", "v", {"c1"}});
  s.edges.push_back({"exy", "x", "y", {"c1"}});
  s.edges.push_back({"eux", "u", "x", {}});
  s.edges.push_back({"evy", "v", "y", {}});
  s.crossings.push_back({"c1", "euv", "exy", +1});
  s.rotations["u"] = {{"euv", false}, {"eux", false}};
  s.rotations["v"] = {{"evy", false}, {"euv", true}};
  s.rotations["x"] = {{"eux", true}, {"exy", false}};
  s.rotations["y"] = {{"exy", true}, {"evy", true}};
  return s;
}

// Just the two crossing edges; the crossing is an articulation point.
inline DrawingSpec bare_cross() {
  DrawingSpec s;
  s.vertices = {"u", "v", "x", "y"};
  s.edges.push_back({"euv", "u", "v", {"c1"}});
  s.edges.push_back({"exy", "x", "y", {"c1"}});
  s.crossings.push_back({"c1", "euv", "exy", +1});
  s.rotations["u"] = {{"euv", false}};
  s.rotations["v"] = {{"euv", true}};
  s.rotations["x"] = {{"exy", false}};
  s.rotations["y"] = {{"exy", true}};
  return s;
}

// Square u, x, v, y with both diagonals, crossing at c1; the crossing is
// not a cut node here. Geometry: u=(0,0), x=(1,0), v=(1,1), y=(0,1).
inline DrawingSpec crossed_quad() {
  DrawingSpec s;
  s.vertices = {"u", "v", "x", "y"};
  s.edges.push_back({"euv", "u", "v", {"c1"}});
  s.edges.push_back({"exy", "x", "y", {"c1"}});
  s.edges.push_back({"eux", "u", "x", {}});
  s.edges.push_back({"exv", "x", "v", {}});
  s.edges.push_back({"evy", "v", "y", {}});
  s.edges.push_back({"eyu", "y", "u", {}});
  s.crossings.push_back({"c1", "euv", "exy", +1});
  s.rotations["u"] = {{"eux", false}, {"euv", false}, {"eyu", true}};
  s.rotations["x"] = {{"exv", false}, {"exy", false}, {"eux", true}};
  s.rotations["v"] = {{"evy", false}, {"euv", true}, {"exv", true}};
  s.rotations["y"] = {{"evy", true}, {"eyu", false}, {"exy", true}};
  return s;
}

// Two parallel u-v arcs bounding an empty region: the forbidden bigon.
inline DrawingSpec empty_bigon() {
  DrawingSpec s;
  s.vertices = {"u", "v"};
  s.edges.push_back({"p1", "u", "v", {}});
  s.edges.push_back({"p2", "u", "v", {}});
  s.rotations["u"] = {{"p1", false}, {"p2", false}};
  s.rotations["v"] = {{"p1", true}, {"p2", true}};
  return s;
}

// Loop at a enclosing b, with c outside; legal by the homotopy rule.
inline DrawingSpec legal_loop() {
  DrawingSpec s;
  s.vertices = {"a", "b", "c"};
  s.edges.push_back({"L", "a", "a", {}});
  s.edges.push_back({"ab", "a", "b", {}});
  s.edges.push_back({"ac", "a", "c", {}});
  s.rotations["a"] = {{"ab", false}, {"L", false}, {"ac", false}, {"L", true}};
  s.rotations["b"] = {{"ab", true}};
  s.rotations["c"] = {{"ac", true}};
  return s;
}

// Loop at a enclosing b with nothing else: violates the homotopy rule
// (no vertex outside besides the basepoint).
inline DrawingSpec lonely_loop() {
  DrawingSpec s;
  s.vertices = {"a", "b"};
  s.edges.push_back({"L", "a", "a", {}});
  s.edges.push_back({"ab", "a", "b", {}});
  s.rotations["a"] = {{"ab", false}, {"L", false}, {"L", true}};
  s.rotations["b"] = {{"ab", true}};
  return s;
}

}  // namespace fixtures
