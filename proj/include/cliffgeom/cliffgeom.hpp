#pragma once

#include "cliffgeom/axioms.hpp"
#include "cliffgeom/blade.hpp"
#include "cliffgeom/desargues.hpp"
#include "cliffgeom/errors.hpp"
#include "cliffgeom/exporters.hpp"
#include "cliffgeom/gaussian.hpp"
#include "cliffgeom/geometry.hpp"
#include "cliffgeom/gf2.hpp"
#include "cliffgeom/incidence_doc.hpp"
#include "cliffgeom/isomorphism.hpp"
#include "cliffgeom/lie_closure.hpp"
#include "cliffgeom/pauli.hpp"
#include "cliffgeom/report.hpp"
