#pragma once

#include "plactic/duration.hpp"
#include "plactic/error.hpp"
#include "plactic/greene.hpp"
#include "plactic/insertion.hpp"
#include "plactic/knuth.hpp"
#include "plactic/rsk.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"
