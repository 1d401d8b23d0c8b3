#pragma once

#include <stdexcept>

namespace topo {

struct PlanningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSceneError : PlanningError {
  using PlanningError::PlanningError;
};

struct CollisionError : PlanningError {
  using PlanningError::PlanningError;
};

struct DegenerateDiagramError : PlanningError {
  using PlanningError::PlanningError;
};

struct SurfaceConstructionError : PlanningError {
  using PlanningError::PlanningError;
};

}  // namespace topo
