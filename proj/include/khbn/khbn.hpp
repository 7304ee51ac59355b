#pragma once

#include "khbn/chain.hpp"
#include "khbn/cube.hpp"
#include "khbn/homology.hpp"
#include "khbn/laurent.hpp"
#include "khbn/linalg.hpp"
#include "khbn/pd.hpp"
#include "khbn/poly.hpp"
#include "khbn/verify.hpp"
