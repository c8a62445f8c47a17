#pragma once

#include "belltel/channel.hpp"
#include "belltel/claims.hpp"
#include "belltel/criteria.hpp"
#include "belltel/linalg.hpp"
#include "belltel/states.hpp"
#include "belltel/teleport.hpp"
