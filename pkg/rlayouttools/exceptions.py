class MalformedGraphException(Exception):
    '''Raised when a rotation system is structurally broken (asymmetric, loops, parallel edges,
       disconnected or not planar).'''
    pass


class ImproperGraphException(Exception):
    '''Raised when an operation needs a proper extended graph and gets something else.'''
    pass


class InvalidLabelingException(Exception):
    '''Raised when a labeling does not satisfy the regular edge labeling conditions.'''
    pass


class InvalidMoveException(Exception):
    '''Raised when a move is applied to a four-cycle that is not alternating in the labeling.'''
    pass


class LatticeTooLargeException(Exception):
    '''Raised when an explicit lattice enumeration exceeds the configured cap.'''
    pass


class NestedSeparatingCycleException(Exception):
    '''Raised when a graph with a nontrivial separating four-cycle is given to an operation
       that needs it decomposed first.'''
    pass


class InvalidIdealException(Exception):
    '''Raised when a partition is not a lower set / upper set split of the flip order.'''
    pass


class ConstraintSpecException(Exception):
    '''Raised for constraints on nonexistent edges or triangles, or with unknown label names.'''
    pass


class InputFormatException(Exception):
    '''Raised when an input file cannot be parsed.'''

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "{} (line {}, column {})".format(message, line, column)
        super().__init__(message)


class InvalidConfigException(Exception):
    '''Raised for unknown or out-of-range run configuration values.'''
    pass


class SearchIncompleteException(Exception):
    '''Raised when a search stops at its configured bound before it could rule out every candidate.'''
    pass
