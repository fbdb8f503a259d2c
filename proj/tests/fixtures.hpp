#pragma once

#include <functional>
#include <string_view>

#include "shapeparts/domain.hpp"

namespace shapeparts::fixtures {

/// Predicate over normalised coordinates: x to the right, y downward, both in [0, 1].
using ShapeFn = std::function<bool(double x, double y)>;

/// Samples the predicate at pixel centres.
BinaryMask rasterize(int width, int height, const ShapeFn& shape);

/// Full rectangle of shape pixels.
BinaryMask filled(int width, int height);

/// Small disk with four thin rectangular arms along the axes.
BinaryMask protrusions(int size);
/// Two large lobes joined by a thin neck; its positive region splits in two.
BinaryMask thin_neck(int size);
/// Large lobe and a smaller lobe joined by a medium neck.
BinaryMask two_lobe(int size);
/// Dumbbell with neck half-width `neck` (normalised units).
BinaryMask dumbbell(int width, int height, double neck);
/// Oval body with head, four limbs and a short stubby tail.
BinaryMask turtle(int size);
/// Stick-figure silhouette; `with_hole` punches a small hole into the torso.
BinaryMask human(int size, bool with_hole);
/// Three overlapping disks of unequal radius in a row.
BinaryMask three_blob(int width, int height);
BinaryMask disk(int size);
BinaryMask rectangle(int width, int height, int margin);

}  // namespace shapeparts::fixtures
