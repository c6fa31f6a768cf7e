#pragma once

// Knot-theoretic ternary groups: finite abelian group arithmetic, ternary
// structures and identities, classification by order, and region colorings
// of flat (virtual) link diagrams.

#include "ktg/abelian.hpp"
#include "ktg/automorphism.hpp"
#include "ktg/binary_group.hpp"
#include "ktg/classify.hpp"
#include "ktg/coloring.hpp"
#include "ktg/diagram.hpp"
#include "ktg/error.hpp"
#include "ktg/identity.hpp"
#include "ktg/properties.hpp"
#include "ktg/report.hpp"
#include "ktg/smith.hpp"
#include "ktg/structure.hpp"
#include "ktg/ternary.hpp"
