#pragma once

#include "glide/braid.hpp"
#include "glide/complex.hpp"
#include "glide/dimer.hpp"
#include "glide/error.hpp"
#include "glide/gliding.hpp"
#include "glide/incidence.hpp"
#include "glide/io.hpp"
#include "glide/labelings.hpp"
#include "glide/typing.hpp"
#include "glide/words.hpp"
