#pragma once

// Finite windows of the example families, with their analytic dims.

#include "dimstruct/gallery/growth.hpp"
#include "dimstruct/gallery/iterate.hpp"
#include "dimstruct/gallery/lebesgue.hpp"
#include "dimstruct/gallery/ranked.hpp"
#include "dimstruct/gallery/sample.hpp"
#include "dimstruct/gallery/scale.hpp"
#include "dimstruct/gallery/tower.hpp"
