#pragma once

#include "msq/grid.hpp"
#include "msq/construct.hpp"
#include "msq/verify.hpp"
#include "msq/transform.hpp"
#include "msq/enumerate.hpp"
#include "msq/io.hpp"
