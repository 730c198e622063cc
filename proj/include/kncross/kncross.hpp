#pragma once

#include "geometry.hpp"
#include "errors.hpp"
#include "drawing.hpp"
#include "deletion.hpp"
#include "planarizer.hpp"
#include "kedge.hpp"
#include "shelling.hpp"
#include "generators.hpp"
#include "io.hpp"
