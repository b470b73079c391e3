from enum import Enum


class Color(Enum):
    red = 'red'
    blue = 'blue'

    def __str__(self):
        return self.name


class Chirality(Enum):
    '''Direction in which the interior of an alternating four-cycle is rotated.
       Clockwise moves go down the lattice, counterclockwise moves go up.'''
    cw = 'cw'
    ccw = 'ccw'

    def __str__(self):
        return self.name


class Direction(Enum):
    down = 'down'
    up = 'up'

    def __str__(self):
        return self.name


class Command(Enum):
    validate = 'validate'
    exists = 'exists'
    count = 'count'
    enumerate = 'enumerate'
    decompose = 'decompose'
    area_universal = 'area-universal'
    render = 'render'

    def __str__(self):
        return self.value
