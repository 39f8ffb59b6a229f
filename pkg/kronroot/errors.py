class KronRootException(Exception):
    """
        If we are asked to do something with a matrix or scalar that is not
        supported this error will be raised.
    """
    def __init__(self, msg, error_code=None):
        self.msg = msg
        self.code = error_code

    def __str__(self):
        return "Message: {message} Code: {code}".format(message=self.msg,
                                                        code=self.code)


class FieldException(KronRootException):
    """
        If operands live in different fields, a GF modulus is not an
        acceptable prime, or a value cannot be represented in the requested
        field then this error is raised.
    """
    pass


class DimensionException(KronRootException):
    """
        If a matrix does not have the shape an operation needs, or an index
        such as the factor position j is out of range, this error is raised.
    """
    pass


class SizeLimitException(KronRootException):
    """
        If a matrix, or a Kronecker power about to be built, would hold more
        entries than the configured cap then this error is raised.
    """
    pass


class CharacteristicException(KronRootException):
    """
        If an operation that needs the field characteristic not to divide k
        is used over a field where it does, this error is raised.
    """
    pass


class ParseException(KronRootException):
    """
        If scalar text or a matrix file cannot be read this error is raised.
        The code holds the offending line number when there is one.
    """
    def __str__(self):
        return "Message: {message} Line: {line}".format(message=self.msg,
                                                        line=self.code)
